"""Exception types shared across the package."""


class ToricError(ValueError):
    """A domain error: the input is well-formed but mathematically invalid.

    The command line maps these to exit status 2.
    """
