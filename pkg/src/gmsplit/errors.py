class GMSplitError(ValueError):
    """Raised when an operation's precondition fails.

    ``code`` is a stable machine-readable identifier (e.g. ``"no-spine"``);
    the message is for humans.
    """

    def __init__(self, code: str, message: str = ""):
        self.code = code
        super().__init__(f"{code}: {message}" if message else code)
