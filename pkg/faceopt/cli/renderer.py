"""
Text rendering of command results
"""
import os
from typing import Any, Dict

from jinja2 import Environment, FileSystemLoader, select_autoescape

from faceopt.cli.io import dump_json


class ReportRenderer:
    """Jinja2 renderer for result documents"""

    def __init__(self):
        template_dir = os.path.join(os.path.dirname(__file__), 'templates')
        self.env = Environment(
            loader=FileSystemLoader(template_dir),
            autoescape=select_autoescape(['html', 'xml']),
            keep_trailing_newline=True
        )

    def render(self, template_name: str, doc: Dict[str, Any]) -> str:
        return self.env.get_template(template_name).render(doc=doc)

    def render_json(self, doc: Dict[str, Any]) -> str:
        return dump_json(doc)
