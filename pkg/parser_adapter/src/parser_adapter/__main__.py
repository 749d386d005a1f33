"""Allow ``python3 -m parser_adapter`` as an alias for the console script."""

from .cli import main

raise SystemExit(main())
