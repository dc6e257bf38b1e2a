""" Module """
