"""
Render Module

jinja2 renderings for the command line: DOT for resolution graphs and
schematics, plain text for surface reports.
"""
from service.render.renderers import render_schematic_dot, render_surface_text, render_weighted_graph_dot
from service.render.template_loader import TemplateLoader, get_template_loader

__all__ = [
    'TemplateLoader',
    'get_template_loader',
    'render_schematic_dot',
    'render_surface_text',
    'render_weighted_graph_dot',
]
