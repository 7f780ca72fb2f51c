"""
String parsing and formatting operations.
"""
from fractions import Fraction

import regex

from ..exceptions import ParseError
from .. import settings


def nicejoin(*items, sep=', ', term=' and '):
    """Join a sequence of strings with a separator and an alternative terminal
    separator.

    Examples
    --------
    >>> nicejoin('(2,1)', '(3,1)', '(6,1)')
    '(2,1), (3,1) and (6,1)'
    >>> nicejoin('3', '4', term=' or ')
    '3 or 4'
    >>> nicejoin('3')
    '3'
    """
    if len(items) > 1:
        return sep.join(items[:-1]) + term + items[-1]
    elif len(items) == 1:
        return items[0]
    else:
        return ''


def strip_end_quotes(s):
    """Strip matched quotes from the ends a string.

    Examples
    --------
    >>> strip_end_quotes('"IRSA R=1/3"')
    'IRSA R=1/3'
    >>> strip_end_quotes('no "quotes" here')
    'no "quotes" here'
    """
    for char in "\'\"":
        if s.count(char) % 2 == 0:  # even number of quotes
            pieces = s.split(char)
            if pieces[0].strip() == '' and pieces[-1].strip() == '':
                return ''.join((pieces[0], char.join(pieces[1:-1]),
                                pieces[-1]))
    return s


def str_to_list(string):
    """Parse a string into a list.

    Parameters
    ----------
    string : str
        The string with list entries separated by semicolons, newlines or
        commas.

    Returns
    -------
    parsed_list : list
        The parsed list with the string split into string pieces.

    Examples
    --------
    >>> str_to_list('3, 4, 5, 8, 9, 12')
    ['3', '4', '5', '8', '9', '12']
    >>> str_to_list('''
    ... 0.1
    ... 0.2''')
    ['0.1', '0.2']
    >>> str_to_list("12")
    ['12']
    """
    pieces_semicolon = string.split(';')

    if len(pieces_semicolon) > 1:
        return [piece.strip() for piece in pieces_semicolon]

    pieces_newline = [piece.strip() for piece in string.split('\n')]
    pieces_newline = list(filter(bool, pieces_newline))  # remove empty items

    if len(pieces_newline) > 1:
        return pieces_newline

    pieces_comma = string.split(',')

    if len(pieces_comma) > 1:
        return [piece.strip() for piece in pieces_comma]

    return [string.strip()]


class ConfigDict(dict):
    """A dict of parsed string entries that remembers where each entry came
    from.

    Attributes
    ----------
    linenos : Dict[str, int]
        The line number of each entry's key.
    block_linenos : Dict[str, int]
        The line number of the first non-empty line of each entry's value.
        For indented sub-blocks, this is the first line of the sub-block.
    """

    linenos = None
    block_linenos = None

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.linenos = dict()
        self.block_linenos = dict()


_re_entry = regex.compile(r'^(?P<space_level>\s*)'
                          r'(?P<key>[^#].*?)'
                          r'(?<!\\)\:'  # match ':' but not '\:'
                          r'\s*'
                          r'(?P<value>.*)')


def str_to_dict(string, strip_quotes=True, first_lineno=1):
    r"""Parse a string into a dict.

    Lines starting with '#' are comments. Entries are 'key: value' pairs, and
    indented lines below an entry belong to that entry.

    Parameters
    ----------
    string : str
        The string with dict-like entries separated by colons.
    strip_quotes : Optional[bool]
        If True, matched quotes ('") are stripped at the ends of value strings.
    first_lineno : Optional[int]
        The line number of the string's first line, used for diagnostics of
        nested blocks.

    Returns
    -------
    parsed_dict : :obj:`ConfigDict`
        The parsed dict with keys and values as strings.

    Raises
    ------
    ParseError
        Raised if a key is listed twice or text precedes the first entry.

    Examples
    --------
    >>> string = '''
    ... k: 2
    ... entries:
    ...   3: 2/3
    ...   4: 1/3
    ... '''
    >>> d = str_to_dict(string)
    >>> d == {'k': '2', 'entries': '  3: 2/3\n  4: 1/3'}
    True
    >>> d.linenos['entries'], d.block_linenos['entries']
    (3, 4)
    """
    d = ConfigDict()
    entries = dict()

    # Keep a list of all (lineno, line) pairs that pertain to a given entry
    current_entry_list = None
    # Keep track of how many spaces were used to define the entry. This is used
    # to place sub-blocks of an entry within the entry.
    current_spaces = None

    for lineno, line in enumerate(string.splitlines(), first_lineno):
        if line.strip().startswith('#'):
            continue

        m = _re_entry.match(line)

        # Workup the line. Strip leading spaces from the line.
        if current_spaces is not None:
            line = line[current_spaces:]

        # Replace escaped colons ('\:') with colons (':')
        line = line.replace("\\:", ":")

        if m is not None:
            group_dict = m.groupdict()
            space_level = len(group_dict['space_level'])
            key = group_dict['key'].strip()
            value = group_dict['value']

            if current_spaces is not None and space_level > current_spaces:
                # Not a new entry. Just add the line to the last entry.
                current_entry_list.append((lineno, line))
            elif key in entries:
                msg = "the entry '{}' is listed more than once".format(key)
                raise ParseError(msg, lineno=lineno)
            else:
                # A new entry. Create a new current_entry_list.
                current_spaces = space_level
                current_entry_list = entries.setdefault(key, [])
                current_entry_list.append((lineno, value))
                d.linenos[key] = lineno
        elif current_entry_list is not None:
            current_entry_list.append((lineno, line))
        elif line.strip():
            msg = "expected a 'key: value' entry, found '{}'".format(
                line.strip())
            raise ParseError(msg, lineno=lineno)

    # Convert the entries in the dict from a list of strings to strings
    for key, lines in entries.items():
        value = "\n".join(text for _, text in lines).strip('\n')
        d[key] = strip_end_quotes(value) if strip_quotes else value
        filled = [no for no, text in lines if text.strip()]
        d.block_linenos[key] = filled[0] if filled else d.linenos[key]

    return d


def str_to_number(string, lineno=None):
    """Parse a decimal or an exact fraction ('2/3') into a float.

    Examples
    --------
    >>> str_to_number('2/3') == 2 / 3
    True
    >>> str_to_number(' 0.554016 ')
    0.554016
    """
    try:
        return float(Fraction(string.strip()))
    except (ValueError, ZeroDivisionError):
        msg = "'{}' is not a decimal number or a fraction".format(string)
        raise ParseError(msg, lineno=lineno)


def str_to_int(string, lineno=None):
    """Parse an integer.

    Examples
    --------
    >>> str_to_int(' 12')
    12
    """
    try:
        return int(string.strip())
    except ValueError:
        msg = "'{}' is not an integer".format(string)
        raise ParseError(msg, lineno=lineno)


def fmt_number(value, digits=None):
    """Format a number with an explicit number of significant digits.

    Examples
    --------
    >>> fmt_number(2 / 3)
    '0.666666667'
    >>> fmt_number(0.5)
    '0.5'
    >>> fmt_number(None)
    ''
    """
    if value is None:
        return ''
    if isinstance(value, str):
        return value
    digits = digits if digits is not None else settings.output_digits
    return '{:.{}g}'.format(value, digits)
