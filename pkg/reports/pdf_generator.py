"""
PDF reports for certificates and crosscheck sweeps
Uses ReportLab for PDF generation
"""
from datetime import datetime
from pathlib import Path
from typing import List, Sequence

import pandas as pd
from reportlab.lib import colors
from reportlab.lib.enums import TA_CENTER, TA_LEFT
from reportlab.lib.pagesizes import A4
from reportlab.lib.styles import ParagraphStyle, getSampleStyleSheet
from reportlab.lib.units import cm
from reportlab.platypus import Paragraph, SimpleDocTemplate, Spacer, Table, TableStyle

import config
from graphs.graph import Graph
from structural.certificate import Certificate
from workbench.serialize import to_graph6


class PDFReportGenerator:
    """Generate PDF reports for certificates and crosscheck runs"""

    COLORS = {
        'header_bg': colors.Color(0.2, 0.4, 0.2),  # Dark green
        'good': colors.Color(0.78, 0.94, 0.81),     # Light green
        'bad': colors.Color(1.0, 0.78, 0.81),       # Light red
        'border': colors.Color(0.8, 0.8, 0.8),
        'text': colors.black,
        'header_text': colors.white
    }

    # Longest tables are cut here; the CSV/Excel exports carry everything
    MAX_TABLE_ROWS = 200

    def __init__(self, output_dir: Path = None):
        self.output_dir = Path(output_dir or config.OUTPUT_DIR)
        self.output_dir.mkdir(parents=True, exist_ok=True)

        self.styles = getSampleStyleSheet()
        self._setup_custom_styles()

    def _setup_custom_styles(self):
        self.styles.add(ParagraphStyle(
            name='ReportTitle',
            parent=self.styles['Heading1'],
            fontSize=16,
            spaceAfter=12,
            alignment=TA_LEFT
        ))

        self.styles.add(ParagraphStyle(
            name='ReportSubtitle',
            parent=self.styles['Normal'],
            fontSize=10,
            textColor=colors.grey,
            spaceAfter=20
        ))

        self.styles.add(ParagraphStyle(
            name='BulletPoint',
            parent=self.styles['Normal'],
            fontSize=9,
            leading=12,
            leftIndent=20,
            bulletIndent=10,
            spaceBefore=4,
            spaceAfter=4
        ))

        self.styles.add(ParagraphStyle(
            name='TableCell',
            parent=self.styles['Normal'],
            fontSize=8,
            alignment=TA_CENTER
        ))

    def _table(self, rows: List[Sequence], col_widths: Sequence[float], highlight: colors.Color = None) -> Table:
        """Header row in the report green, grid borders, optional body tint"""
        table = Table([list(r) for r in rows], colWidths=list(col_widths), repeatRows=1)
        style = [
            ('BACKGROUND', (0, 0), (-1, 0), self.COLORS['header_bg']),
            ('TEXTCOLOR', (0, 0), (-1, 0), self.COLORS['header_text']),
            ('ALIGN', (0, 0), (-1, -1), 'CENTER'),
            ('VALIGN', (0, 0), (-1, -1), 'MIDDLE'),
            ('FONTNAME', (0, 0), (-1, 0), 'Helvetica-Bold'),
            ('FONTSIZE', (0, 0), (-1, -1), 8),
            ('GRID', (0, 0), (-1, -1), 0.5, self.COLORS['border']),
            ('TOPPADDING', (0, 0), (-1, -1), 4),
            ('BOTTOMPADDING', (0, 0), (-1, -1), 4),
        ]
        if highlight is not None and len(rows) > 1:
            style.append(('BACKGROUND', (0, 1), (-1, -1), highlight))
        table.setStyle(TableStyle(style))
        return table

    def _header(self, title: str, when: datetime) -> Table:
        header_table = Table([
            [Paragraph(title, self.styles['ReportTitle']),
             Paragraph(when.strftime('%d %B %Y %H:%M'), self.styles['ReportSubtitle'])]
        ], colWidths=[12*cm, 6*cm])
        header_table.setStyle(TableStyle([
            ('ALIGN', (0, 0), (0, 0), 'LEFT'),
            ('ALIGN', (1, 0), (1, 0), 'RIGHT'),
            ('VALIGN', (0, 0), (-1, -1), 'TOP'),
        ]))
        return header_table

    def _footer(self) -> Table:
        footer_table = Table([[config.REPORT_TITLE, config.REPORT_AUTHOR]], colWidths=[9*cm, 9*cm])
        footer_table.setStyle(TableStyle([
            ('ALIGN', (0, 0), (0, 0), 'LEFT'),
            ('ALIGN', (1, 0), (1, 0), 'RIGHT'),
            ('TEXTCOLOR', (0, 0), (-1, -1), colors.grey),
            ('FONTSIZE', (0, 0), (-1, -1), 8),
        ]))
        return footer_table

    def _build(self, filename: str, story: list) -> Path:
        output_path = self.output_dir / filename
        doc = SimpleDocTemplate(
            str(output_path),
            pagesize=A4,
            rightMargin=1*cm,
            leftMargin=1*cm,
            topMargin=1*cm,
            bottomMargin=1*cm,
            title=config.REPORT_TITLE,
            author=config.REPORT_AUTHOR,
        )
        story.append(Spacer(1, 20))
        story.append(self._footer())
        doc.build(story)
        return output_path

    def create_certificate_table(self, certificate: Certificate) -> Table:
        """Arc table for an accept, branch-set table for a reject"""
        if certificate.orientation is not None:
            rows = [['Tail', 'Head', 'Tail out-degree']]
            rows += [[x, y, certificate.orientation.out_degree(x)] for x, y in certificate.orientation.arcs()]
            return self._table(rows[:self.MAX_TABLE_ROWS + 1], [3*cm, 3*cm, 4*cm], self.COLORS['good'])
        rows = [['Pattern vertex', 'Branch set']]
        if certificate.witness is not None:
            sets = certificate.witness.model.as_dict()
            rows += [[k, ", ".join(str(x) for x in members)] for k, members in sets.items()]
        return self._table(rows, [4*cm, 14*cm], self.COLORS['bad'])

    def generate_certificate_report(self, graph: Graph, certificate: Certificate,
                                    filename: str = None, when: datetime = None) -> Path:
        """
        One-page report for a recognizer verdict

        Args:
            graph: The host graph
            certificate: Certificate for ``graph``
            filename: Output filename (defaults to graph6 and verdict)

        Returns:
            Path to the generated PDF
        """
        when = when or datetime.now()
        code = to_graph6(graph)
        if filename is None:
            safe = "".join(ch if ch.isalnum() else "_" for ch in code)
            filename = f"certificate_{safe}_{certificate.verdict.value}.pdf"

        story = [self._header('Recognition certificate', when), Spacer(1, 12)]
        facts = [
            f"Graph (graph6): <b>{code}</b>, {graph.n} vertices, {graph.num_edges} edges",
            f"Verdict: <b>{certificate.verdict.value}</b>",
            f"Reason: {certificate.reason or 'n/a'}",
            f"Certificate verifies: {'yes' if certificate.verify(graph) else 'NO'}",
        ]
        if certificate.witness is not None:
            facts.append(f"Witness pattern: {certificate.witness.pattern} (induced minor)")
        if certificate.sink is not None:
            facts.append(f"Requested sink: {certificate.sink}")
        for fact in facts:
            story.append(Paragraph(f"• {fact}", self.styles['BulletPoint']))
        story.append(Spacer(1, 12))
        story.append(self.create_certificate_table(certificate))
        return self._build(filename, story)

    def generate_crosscheck_report(self, report, filename: str = None, when: datetime = None) -> Path:
        """Per-suite summary table followed by the disagreements table"""
        when = when or datetime.now()
        filename = filename or f"crosscheck_n{report.n_max}_{when.strftime('%Y%m%d_%H%M')}.pdf"

        story = [self._header(f'Crosscheck, n &lt;= {report.n_max}', when), Spacer(1, 12)]
        story.append(Paragraph(
            f"• {report.graphs_checked} connected graphs, {len(report.disagreements)} disagreements, "
            f"{report.elapsed:.1f}s",
            self.styles['BulletPoint'],
        ))
        story.append(Spacer(1, 12))

        summary: pd.DataFrame = report.summary_frame()
        rows = [['Suite', 'Max n', 'Graphs', 'Disagreements']]
        rows += summary[['suite', 'max_n', 'graphs', 'disagreements']].values.tolist()
        table = self._table(rows, [6*cm, 2.5*cm, 3*cm, 3.5*cm])
        tints = [('BACKGROUND', (0, i), (-1, i), self.COLORS['bad'] if row[3] else self.COLORS['good'])
                 for i, row in enumerate(rows[1:], start=1)]
        table.setStyle(TableStyle(tints))
        story.append(table)

        if report.disagreements:
            story.append(Spacer(1, 16))
            frame = report.to_dataframe().head(self.MAX_TABLE_ROWS)
            rows = [['graph6', 'Suite', 'Predicates', 'Verdicts']] + frame.values.tolist()
            story.append(self._table(rows, [3*cm, 4*cm, 6*cm, 5*cm], self.COLORS['bad']))
        return self._build(filename, story)
