"""
Report generation modules
"""
from .charts import ChartGenerator, circular_positions, grid_positions
from .pdf_generator import PDFReportGenerator

__all__ = ['ChartGenerator', 'PDFReportGenerator', 'circular_positions', 'grid_positions']
