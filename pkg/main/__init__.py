import logging

# Initialize the logger
logger = logging.getLogger(__name__)
