from pactlib.exception.exit_codes import ExitCodes
from pactlib.exception.pact_err import PactErr
from pactlib.exception.parse_err import ParseErr
from pactlib.exception.unknown_constant_err import UnknownConstantErr
from pactlib.exception.type_mismatch_err import TypeMismatchErr
from pactlib.exception.unbound_variable_err import UnboundVariableErr
from pactlib.exception.declaration_err import DeclarationErr
from pactlib.exception.no_hole_err import NoHoleErr
from pactlib.exception.multiple_holes_err import MultipleHolesErr
from pactlib.exception.schema_err import SchemaErr
from pactlib.exception.invariant_err import InvariantErr
from pactlib.exception.empty_name_err import EmptyNameErr
from pactlib.exception.missing_name_err import MissingNameErr
from pactlib.exception.tactic_err import TacticErr
from pactlib.exception.tactic_parse_err import TacticParseErr
from pactlib.exception.tactic_failed_err import TacticFailedErr
from pactlib.exception.tactic_timeout_err import TacticTimeoutErr
from pactlib.exception.scan_io_err import ScanIoErr
from pactlib.exception.usage_err import UsageErr
