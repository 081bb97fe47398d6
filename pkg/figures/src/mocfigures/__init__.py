"""Static figure rendering for the conversion model's CSV outputs.

Consumes only the published CSV contract of the ``rydmoc`` CLI; never its
library API.
"""

__version__ = "0.1.0"

from .panels import FigureJob, PANELS, RenderInfo, SchemaError, render

__all__ = ["FigureJob", "PANELS", "RenderInfo", "SchemaError", "render", "__version__"]
