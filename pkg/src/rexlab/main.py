import logging

from rexlab.app import cli
from rexlab.config import settings


def main() -> None:
    logging.basicConfig(
        level=settings.LOG_LEVEL,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    cli(prog_name="rexlab")


if __name__ == "__main__":
    main()
