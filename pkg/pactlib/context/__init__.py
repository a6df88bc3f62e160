from pactlib.context.command_context import CommandContext, SCHEMA_VERSION
