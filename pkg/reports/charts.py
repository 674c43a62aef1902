"""
Chart generation for graphs, certificates and crosscheck reports
Uses Plotly for interactive charts
"""
import math
from typing import Optional

import numpy as np
import pandas as pd
import plotly.graph_objects as go

import config
from graphs.graph import Graph
from oracles.orientation import Orientation, sinks
from structural.certificate import Witness


def circular_positions(n: int) -> np.ndarray:
    """Vertices evenly spaced on the unit circle, vertex 0 at the top"""
    if n == 0:
        return np.zeros((0, 2))
    angles = np.pi / 2 - 2 * np.pi * np.arange(n) / n
    return np.column_stack([np.cos(angles), np.sin(angles)])


def grid_positions(n: int, cols: int = None) -> np.ndarray:
    """Row-major grid matching the ``grid`` generator's labels (index r*cols + c)"""
    cols = cols or max(1, math.ceil(math.sqrt(n)))
    index = np.arange(n)
    return np.column_stack([index % cols, -(index // cols)]).astype(float)


class ChartGenerator:
    """Generate charts for the workbench dashboard and reports"""

    COLORS = {
        'primary': '#2E7D32',      # Dark green
        'secondary': '#FFA000',     # Amber/orange
        'tertiary': '#1565C0',      # Blue
        'positive': '#4CAF50',      # Green
        'negative': '#F44336',      # Red
        'neutral': '#9E9E9E',       # Grey
        'background': '#FFFFFF',
        'grid': '#E0E0E0',
        'text': '#333333'
    }

    LAYOUT_DEFAULTS = {
        'font': {'family': 'Arial, sans-serif', 'size': 12, 'color': '#333333'},
        'plot_bgcolor': 'white',
        'paper_bgcolor': 'white',
        'margin': {'l': 30, 'r': 30, 't': 50, 'b': 30},
        'hovermode': 'closest'
    }

    def _apply_layout(self, fig: go.Figure, title: str = None,
                      height: int = 450, axes: bool = True) -> go.Figure:
        """Apply consistent styling to figures"""
        layout_updates = {
            **self.LAYOUT_DEFAULTS,
            'height': height,
        }

        if title:
            layout_updates['title'] = {
                'text': title,
                'x': 0.5,
                'xanchor': 'center',
                'font': {'size': 16, 'color': self.COLORS['text']}
            }

        fig.update_layout(**layout_updates)

        axis_style = {'showgrid': axes, 'gridcolor': self.COLORS['grid'],
                      'showline': axes, 'linecolor': self.COLORS['grid']}
        if not axes:
            axis_style.update({'zeroline': False, 'showticklabels': False})
        fig.update_xaxes(**axis_style)
        fig.update_yaxes(**axis_style)
        return fig

    def create_graph_chart(self, graph: Graph, orientation: Optional[Orientation] = None,
                           witness: Optional[Witness] = None, title: str = None,
                           positions: np.ndarray = None) -> go.Figure:
        """
        Draw a graph; arcs of ``orientation`` become arrows, branch sets of
        ``witness`` are coloured one palette entry per pattern vertex

        Args:
            graph: Graph to draw
            orientation: Optional orientation of ``graph``
            witness: Optional induced-minor model in ``graph``
            positions: (n, 2) array; circular layout when omitted
        """
        pos = circular_positions(graph.n) if positions is None else positions
        colors = config.GRAPH_COLORS
        fig = go.Figure()

        if orientation is None and graph.num_edges:
            xs, ys = [], []
            for u, v in graph.edges():
                xs += [pos[u, 0], pos[v, 0], None]
                ys += [pos[u, 1], pos[v, 1], None]
            fig.add_trace(go.Scatter(x=xs, y=ys, mode='lines', hoverinfo='skip',
                                     line={'color': colors['edge'], 'width': 2}, showlegend=False))

        vertex_colors = [colors['vertex']] * graph.n
        hover = [f"vertex {v}, degree {graph.degree(v)}" for v in graph.vertices]
        if witness is not None:
            palette = config.BRANCH_SET_PALETTE
            vertex_colors = [colors['unused']] * graph.n
            for k, members in witness.model.branch_sets.items():
                for x in members:
                    vertex_colors[x] = palette[k % len(palette)]
                    hover[x] += f", branch set {k}"
        if orientation is not None:
            for s in sinks(orientation):
                vertex_colors[s] = colors['sink']
                hover[s] += ", sink"

        fig.add_trace(go.Scatter(
            x=pos[:, 0], y=pos[:, 1],
            mode='markers+text',
            text=[str(v) for v in graph.vertices],
            textfont={'color': 'white'},
            hovertext=hover,
            hoverinfo='text',
            marker={'size': 26, 'color': vertex_colors, 'line': {'width': 1, 'color': colors['text']}},
            showlegend=False,
        ))

        if orientation is not None:
            for x, y in orientation.arcs():
                fig.add_annotation(
                    x=pos[y, 0], y=pos[y, 1], ax=pos[x, 0], ay=pos[x, 1],
                    xref='x', yref='y', axref='x', ayref='y',
                    showarrow=True, arrowhead=3, arrowsize=1.2, arrowwidth=2,
                    arrowcolor=colors['arc'], standoff=13, startstandoff=13,
                )

        fig = self._apply_layout(fig, title, axes=False)
        fig.update_yaxes(scaleanchor='x', scaleratio=1)
        return fig

    def create_crosscheck_chart(self, summary: pd.DataFrame) -> go.Figure:
        """
        Graphs checked and disagreements per suite

        Args:
            summary: DataFrame with columns 'suite', 'graphs', 'disagreements'
        """
        fig = go.Figure()
        fig.add_trace(go.Bar(
            x=summary['suite'],
            y=summary['graphs'],
            name='Graphs checked',
            marker_color=self.COLORS['primary'],
        ))
        fig.add_trace(go.Bar(
            x=summary['suite'],
            y=summary['disagreements'],
            name='Disagreements',
            marker_color=self.COLORS['negative'],
        ))
        fig = self._apply_layout(fig, 'Crosscheck by suite')
        fig.update_layout(
            barmode='group',
            legend={'orientation': 'h', 'yanchor': 'bottom', 'y': -0.45, 'x': 0.5, 'xanchor': 'center'}
        )
        fig.update_yaxes(title='Count')
        return fig

    def create_size_chart(self, sizes: pd.DataFrame) -> go.Figure:
        """
        Connected graphs per vertex count, split by verdict

        Args:
            sizes: DataFrame with columns 'n', 'accepted', 'rejected'
        """
        fig = go.Figure()
        fig.add_trace(go.Bar(x=sizes['n'], y=sizes['accepted'], name='1-p.o.',
                             marker_color=self.COLORS['positive']))
        fig.add_trace(go.Bar(x=sizes['n'], y=sizes['rejected'], name='not 1-p.o.',
                             marker_color=self.COLORS['neutral']))
        fig = self._apply_layout(fig, 'Connected graphs by size')
        fig.update_layout(barmode='stack')
        fig.update_xaxes(title='Vertices', dtick=1)
        fig.update_yaxes(title='Graphs', type='log')
        return fig
