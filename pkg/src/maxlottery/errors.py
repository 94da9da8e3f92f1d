"""Exception hierarchy shared by every module of the package."""


class SocialChoiceError(ValueError):
    """Base class for all errors raised by :mod:`maxlottery`."""


class EmptyProfile(SocialChoiceError):
    pass


class DimensionMismatch(SocialChoiceError):
    pass


class InvalidLottery(SocialChoiceError):
    pass


class InvalidFactor(SocialChoiceError):
    pass


class NotSkewSymmetric(SocialChoiceError):
    pass


class NonOrdinalProfile(SocialChoiceError):
    """An ordinal-only operation received a profile with raw SSB voter types."""


class UnknownMechanism(SocialChoiceError):
    pass


class UnknownProperty(SocialChoiceError):
    pass


class UnknownCampaign(SocialChoiceError):
    pass


class ParseError(SocialChoiceError):
    """Malformed profile text. Carries a 1-based line and column when known."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class UnknownAlternative(ParseError):
    pass


class DuplicateAlternative(ParseError):
    pass
