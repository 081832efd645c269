"""Module containing the `UserInputError` exception class and its refinements."""


class UserInputError(Exception):
    """
    Exception representing invalid user input such as command line arguments.

    Alternatively, this can also represent a problem caused by
    invalid user input further down the line, for example parameters
    handed to a pipeline that violate its preconditions.
    Simply put, the problem can / must be fixed by modifying the user input.

    Attributes:
        message {string} -- Error message to print.
        code {int} -- Exit code to use.

    """

    def __init__(self, message, code=2):
        """
        Initialize a new user input error instance.

        Arguments:
            message {string} -- Message to display.
            code {int} -- Preferred exit code (only if application exits).

        """
        super().__init__(message, code)

        self.message = message
        self.code = code


class InvalidParams(UserInputError):
    """Parameters outside of the domain of the requested operation."""


class CapExceeded(UserInputError):
    """
    An exhaustive check or enumeration would exceed its configured cap.

    Attributes:
        cap {int} -- The cap that was exceeded.
        required {int} -- Amount of work the request would need.

    """

    def __init__(self, message, cap=None, required=None):
        """
        Initialize a new cap error.

        Arguments:
            message {string} -- Message to display.
            cap {int} -- The configured cap.
            required {int} -- Amount of work the request would need.

        """
        super().__init__(message)

        self.cap = cap
        self.required = required
