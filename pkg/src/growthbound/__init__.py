"""Upper bounds on the growth constants of polyominoes and polycubes via twig sets."""

__version__ = "0.1.0"
