from randic.main import run

raise SystemExit(run())
