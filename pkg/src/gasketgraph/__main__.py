"""Entry point for python -m gasketgraph."""

from gasketgraph.cli import app

if __name__ == "__main__":
    app()
