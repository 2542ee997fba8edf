# one module per subcommand
from . import bound, canon, enumerate, gen, index, profile, verify

__all__ = ["bound", "canon", "enumerate", "gen", "index", "profile", "verify"]
