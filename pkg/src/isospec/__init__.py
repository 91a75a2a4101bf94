"""Exact arithmetic for recognising S6(q), O7(q) and O8+(q) by spectrum.

Submodules:

* :mod:`isospec.arith` - primes, factorisation, cyclotomic values, primitive divisors;
* :mod:`isospec.spectra` - group identifiers, spectra as divisibility bases, exponents;
* :mod:`isospec.primegraph` - Gruenberg-Kegel graphs and maximum cocliques;
* :mod:`isospec.verify` - machine checks and the elimination filters.
"""

from .spectra import Family, GroupId, SpectrumBasis, UnsupportedFamily

__version__ = "0.1.0"

__all__ = ["Family", "GroupId", "SpectrumBasis", "UnsupportedFamily", "__version__"]
