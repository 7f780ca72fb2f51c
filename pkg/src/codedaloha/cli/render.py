"""
Rendering of the human-readable reports.
"""
from functools import lru_cache

import jinja2

from ..utils.string import fmt_number


@lru_cache(maxsize=None)
def jinja_environment():
    """The jinja environment of the report templates."""
    loader = jinja2.PackageLoader('codedaloha', 'templates')
    env = jinja2.Environment(loader=loader, keep_trailing_newline=True,
                             trim_blocks=True, lstrip_blocks=True,
                             undefined=jinja2.StrictUndefined)
    env.filters['num'] = fmt_number
    return env


def render_text(name, **context):
    """Render the report template with the given name."""
    template = jinja_environment().get_template(name + '.txt')
    return template.render(**context)
