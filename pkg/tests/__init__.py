""" Denotes directory is a package """
