try:
    from ._equivart import *  # noqa: F401,F403
    from ._equivart import __version__  # noqa: F401
except ImportError:  # building in-tree: the extension sits next to this package
    from _equivart import *  # noqa: F401,F403
    from _equivart import __version__  # noqa: F401
