from sys import stdout
import numpy as np


def make_csr(lists):
    """
    pack lists of neighbor ids into compressed arrays

    Parameters
    ----------
    lists: sequence of sequences of int
        lists[i] holds the neighbors of node i

    Returns
    -------
    ptr, idx: read only int64 arrays
        The neighbors of node i are idx[ptr[i]:ptr[i+1]], sorted
    """
    ptr = np.zeros(len(lists) + 1, dtype=np.int64)
    for i, items in enumerate(lists):
        ptr[i+1] = ptr[i] + len(items)

    idx = np.zeros(ptr[-1], dtype=np.int64)
    for i, items in enumerate(lists):
        idx[ptr[i]:ptr[i+1]] = sorted(items)

    ptr.flags.writeable = False
    idx.flags.writeable = False
    return ptr, idx


def print_table(rows, header, stream=stdout):
    """
    print rows of values as left aligned columns

    Parameters
    ----------
    rows: sequence of sequences
        Each value is converted with str
    header: sequence of str
        Column names
    stream: optional
        Default stdout
    """
    rows = [[str(val) for val in row] for row in rows]
    widths = [len(name) for name in header]
    for row in rows:
        for i, val in enumerate(row):
            widths[i] = max(widths[i], len(val))

    fmt = '  '.join('%%-%ds' % w for w in widths)
    stream.write((fmt % tuple(header)).rstrip() + '\n')
    for row in rows:
        stream.write((fmt % tuple(row)).rstrip() + '\n')
