from pactlib.exception.exit_codes import ExitCodes


class PactErr(Exception):
    """Base class for every error raised by pactlib"""

    def __init__(self, error_code: 'str', message: 'str' = None, data: 'dict' = None, exit_code: 'int' = ExitCodes.FAILURE):
        super().__init__(message if message else '')
        self.error_code = error_code
        self.data = data
        self.exit_code = exit_code

    def to_dict(self) -> dict:
        ret_val = {
            "errorCode": self.error_code,
            "errorMessage": str(self)
        }
        if self.data:
            ret_val["data"] = self.data
        return ret_val
