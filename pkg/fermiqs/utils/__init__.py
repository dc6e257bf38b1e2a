"""Python module containing helper utility functions """
