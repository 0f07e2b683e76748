import os
import sys
import logging

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from hstrata.app import configure_logging
from hstrata.app.cli import main

configure_logging()
logger = logging.getLogger(__name__)

if __name__ == '__main__':
    logger.info(f"hstrata {' '.join(sys.argv[1:])}")
    main()
