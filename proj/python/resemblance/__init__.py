from ._resemblance import Calculus, Ordinal, ResemblanceError

__all__ = ["Calculus", "Ordinal", "ResemblanceError"]
