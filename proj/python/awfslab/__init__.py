"""Python face of the lifting toolkit; everything speaks canonical JSON text."""

try:  # installed layout: the extension lives inside the package
    from ._core import (  # type: ignore[attr-defined]
        __version__,
        comonad_laws,
        counterexample,
        factorize,
        rmap_iff_section,
        run,
        validate,
    )
except ImportError:  # build-tree layout: the extension sits next to the package dir
    from _core import (  # type: ignore[no-redef]
        __version__,
        comonad_laws,
        counterexample,
        factorize,
        rmap_iff_section,
        run,
        validate,
    )

__all__ = [
    "__version__",
    "comonad_laws",
    "counterexample",
    "factorize",
    "rmap_iff_section",
    "run",
    "validate",
]
