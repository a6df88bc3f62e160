class ExitCodes:
    """Process exit codes returned by the command dispatcher"""

    SUCCESS = 0
    FAILURE = 1
    USAGE = 2
