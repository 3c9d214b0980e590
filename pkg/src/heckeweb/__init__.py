"""Exact-arithmetic canonical bases, web calculus and hook-tableau classes.

Modules:
    qarith      Laurent polynomials over Z, rational functions, quantum numbers
    symgrp      permutations, Bruhat order, parabolic coset machinery
    hecke       the Hecke algebra and its canonical basis
    inducedmod  mixed induced modules and the four wall-changing maps
    uqrep       tensor representations, intertwiners, bilinear form, bases
    webcat      merge/split diagram words and their exact evaluation
    tabgroth    hook tableaux, class bases, translation matrices
    checks      the desk-scale verification battery
    cli         command line entry point

All values are immutable after construction and all operations are pure;
the canonical-basis caches only memoize pure recomputations, so everything
can be shared freely across threads or test workers.
"""

__version__ = "0.1.0"
