"""Rendering of digital images and retractions as ASCII, SVG and plotly figures."""

import xml.etree.ElementTree as ET
from typing import Dict, List, Optional, Tuple

import numpy as np
import pandas as pd
import plotly.express as px
import plotly.graph_objects as go

from .core import DigitalImage, Point, Window

# Colors for image points, lattice points and retraction arrows
PALETTE = {
    'blue': '#4E79A7',
    'orange': '#F28E2B',
    'red': '#E15759',
    'teal': '#76B7B2',
    'green': '#59A14F',
    'yellow': '#EDC948',
    'purple': '#B07AA1',
    'pink': '#FF9DA7',
    'brown': '#9C755F',
    'gray': '#BAB0AC'
}

SVG_NS = "http://www.w3.org/2000/svg"


class LatticeViz:
    """Draws an image on a window of the lattice, with optional retraction arrows."""

    CELL = 20  # SVG pixels per lattice unit

    def __init__(self, theme: str = "lattice"):
        """
        Args:
            theme (str): 'lattice' uses the palette above; any other value
                         falls back to plotly's default colors
        """
        self.theme = theme
        self.colors = list(PALETTE.values()) if theme == "lattice" else px.colors.qualitative.Plotly

    def _window(self, X: DigitalImage, window: Optional[Window]) -> Window:
        return window if window is not None else Window.around(X, 1)

    def arrows(self, X: DigitalImage, r, window: Window) -> List[Tuple[Point, Point]]:
        """Pairs (p, r(p)) for the window points outside X."""
        if r is None:
            return []
        return [(p, Point(*r(p))) for p in window if p not in X]

    def ascii(self, X: DigitalImage, window: Optional[Window] = None) -> str:
        """'#' for points of X, '.' elsewhere; top row is the largest y."""
        window = self._window(X, window)
        grid = np.zeros((window.height, window.width), dtype=bool)
        for p in X.points:
            if p in window:
                grid[window.y_max - p.y, p.x - window.x_min] = True
        return "\n".join("".join(np.where(row, "#", ".")) for row in grid) + "\n"

    def svg(self, X: DigitalImage, r=None, window: Optional[Window] = None) -> str:
        """
        SVG drawing: one unit square per window point, a filled circle per
        point of X, and an arrow p -> r(p) for each window point outside X.
        """
        window = self._window(X, window)
        c = self.CELL

        def centre(p: Point) -> Tuple[int, int]:
            return (p.x - window.x_min) * c + c // 2, (window.y_max - p.y) * c + c // 2

        root = ET.Element("svg", {
            "xmlns": SVG_NS,
            "width": str(window.width * c),
            "height": str(window.height * c),
            "viewBox": f"0 0 {window.width * c} {window.height * c}",
        })
        defs = ET.SubElement(root, "defs")
        marker = ET.SubElement(defs, "marker", {
            "id": "head", "markerWidth": "6", "markerHeight": "6", "refX": "5", "refY": "3", "orient": "auto",
        })
        ET.SubElement(marker, "path", {"d": "M0,0 L6,3 L0,6 z", "fill": PALETTE['red']})

        for p in window:
            x, y = centre(p)
            ET.SubElement(root, "rect", {
                "class": "cell", "x": str(x - c // 2), "y": str(y - c // 2), "width": str(c), "height": str(c),
                "fill": "white", "stroke": "lightgray",
            })
        for p in X.sorted_points():
            if p in window:
                x, y = centre(p)
                ET.SubElement(root, "circle", {
                    "class": "point", "cx": str(x), "cy": str(y), "r": str(c // 4), "fill": self.colors[0],
                })
        for p, q in self.arrows(X, r, window):
            (x1, y1), (x2, y2) = centre(p), centre(q)
            ET.SubElement(root, "line", {
                "class": "arrow", "x1": str(x1), "y1": str(y1), "x2": str(x2), "y2": str(y2),
                "stroke": PALETTE['red'], "marker-end": "url(#head)",
            })
        return ET.tostring(root, encoding="unicode") + "\n"

    def figure(self, X: DigitalImage, r=None, window: Optional[Window] = None, title: str = "") -> go.Figure:
        """
        Create an interactive lattice figure.

        Args:
            X: The image to draw
            r: Optional retraction; arrows are drawn for window points outside X
            window: Region to draw (defaults to X's bounding box grown by 1)
            title: Figure title

        Returns:
            Plotly figure object
        """
        window = self._window(X, window)
        data = pd.DataFrame(
            [(p.x, p.y, "image" if p in X else "lattice") for p in window],
            columns=["x", "y", "role"],
        )
        fig = px.scatter(
            data,
            x="x",
            y="y",
            color="role",
            title=title,
            color_discrete_map={"image": self.colors[0], "lattice": PALETTE['gray']},
        )
        for p, q in self.arrows(X, r, window):
            fig.add_annotation(
                x=q.x, y=q.y, ax=p.x, ay=p.y,
                xref="x", yref="y", axref="x", ayref="y",
                showarrow=True, arrowhead=2, arrowcolor=PALETTE['red'],
            )

        # White background, centered title, legend below the grid
        fig.update_layout(
            plot_bgcolor='white',
            paper_bgcolor='white',
            title={
                'x': 0.5,
                'xanchor': 'center',
                'font': {'size': 24}
            },
            font={'family': 'Arial', 'size': 14},
            legend={'orientation': 'h', 'y': -0.15}
        )

        # Unit lattice, equal aspect
        fig.update_xaxes(dtick=1, showgrid=True, gridcolor='lightgray', zeroline=True, zerolinecolor='gray')
        fig.update_yaxes(dtick=1, showgrid=True, gridcolor='lightgray', zeroline=True, zerolinecolor='gray',
                         scaleanchor="x", scaleratio=1)
        return fig


def render(X: DigitalImage, r=None, window: Optional[Window] = None) -> Dict[str, str]:
    """ASCII and SVG renderings of X (and r, if given) over a window."""
    viz = LatticeViz()
    return {"ascii": viz.ascii(X, window), "svg": viz.svg(X, r, window)}
