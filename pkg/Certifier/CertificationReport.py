"""
Heawood Certifier - Certification Report Module

Renders a CertReport as plain text, as stable JSON, or as a PDF certificate
with a census chart.
"""

import io
import json
from datetime import datetime
from pathlib import Path
from typing import Dict, List

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
from reportlab.lib import colors
from reportlab.lib.enums import TA_CENTER
from reportlab.lib.pagesizes import A4
from reportlab.lib.styles import ParagraphStyle, getSampleStyleSheet
from reportlab.lib.units import inch
from reportlab.platypus import Image, Paragraph, SimpleDocTemplate, Spacer, Table, TableStyle

from .StructureChecks import CertReport
from .Utilities import format_elapsed
from .Logger import get_logger
logger = get_logger(__name__)

PASS_MARK = "PASS"
FAIL_MARK = "FAIL"

# ============================================================================
# TEXT AND JSON
# ============================================================================

def _mark(passed: bool) -> str:
    return PASS_MARK if passed else FAIL_MARK


def census_table_lines(census_dfs: Dict[int, int], census_zeon: Dict[int, int]) -> List[str]:
    lines = [f"{'length':>6}  {'dfs':>6}  {'zeon':>6}  agree"]
    for k in sorted(set(census_dfs) | set(census_zeon)):
        a, b = census_dfs.get(k, 0), census_zeon.get(k, 0)
        lines.append(f"{k:>6}  {a:>6}  {b:>6}  {'yes' if a == b else 'NO'}")
    return lines


def render_text(report: CertReport, include_timings: bool = False) -> str:
    """Human-readable report; deterministic unless timings are requested."""
    s = report.graph_summary
    lines = [
        "Heawood certification",
        f"graph: {s['vertices']} vertices, {s['edges']} edges, girth {s['girth']}, "
        f"bipartite {s['bipartite']}, connected {s['connected']}",
        f"overall: {_mark(report.passed)}"
        + (f" (first failure: {report.first_failure})" if report.first_failure else ""),
        "",
        "cycle census",
    ]
    lines += ["  " + line for line in census_table_lines(report.census_dfs, report.census_zeon)]
    lines += ["", "reference comparison"]
    for row in report.reference_comparison:
        note = " (informational)" if row["informational"] else ""
        verdict = "match" if row["match"] else "MISMATCH"
        lines.append(f"  {row['length']:>2}-cycles: stated {row['stated']}, computed {row['computed']}, {verdict}{note}")
    lines += ["", f"disjoint 6-cycle pairs: {report.disjoint_pair_count}",
              f"automorphism group order: {report.aut_order}",
              f"isomorphic to PGL(2, 7): {report.pgl2_isomorphic}", "", "transitivity"]
    for entry in report.transitivity:
        lines.append(f"  {entry['family']}: {entry['size']} objects, orbit sizes {entry['orbit_sizes']}, "
                     f"stabilizer orders {entry['stabilizer_orders']}, transitive {entry['transitive']}")
    lines += ["", "lemmas"]
    for lemma, counts in report.lemma_summary().items():
        lines.append(f"  {lemma}: {counts['passed']}/{counts['instances']} instances pass")
    lines += ["", "checks"]
    for check in report.checks:
        lines.append(f"  [{_mark(check.passed)}] {check.name}: {check.detail}")
    if include_timings:
        lines += ["", "timings"]
        for stage, ms in report.elapsed_ms.items():
            lines.append(f"  {stage}: {format_elapsed(ms)}")
    return "\n".join(lines) + "\n"


def render_json(report: CertReport, include_timings: bool = False) -> str:
    return json.dumps(report.to_dict(include_timings=include_timings), indent=2) + "\n"

# ============================================================================
# PDF CERTIFICATE
# ============================================================================

def census_chart(report: CertReport) -> io.BytesIO:
    """Grouped bar chart of the cycle census by both methods, as PNG bytes."""
    lengths = sorted(set(report.census_dfs) | set(report.census_zeon))
    positions = range(len(lengths))
    width = 0.4
    plt.figure(figsize=(8, 4))
    plt.bar([p - width / 2 for p in positions], [report.census_dfs.get(k, 0) for k in lengths],
            width=width, label='depth-first', color='#1a237e')
    plt.bar([p + width / 2 for p in positions], [report.census_zeon.get(k, 0) for k in lengths],
            width=width, label='zeon', color='#4ECDC4')
    plt.xticks(list(positions), [str(k) for k in lengths])
    plt.title('Cycles by Length', fontsize=14, fontweight='bold')
    plt.xlabel('Cycle length', fontsize=12)
    plt.ylabel('Cycles', fontsize=12)
    plt.legend()
    plt.grid(True, axis='y', alpha=0.3)
    plt.tight_layout()
    chart_buffer = io.BytesIO()
    plt.savefig(chart_buffer, format='png', dpi=150, bbox_inches='tight')
    chart_buffer.seek(0)
    plt.close()
    return chart_buffer


def _table(rows, col_widths) -> Table:
    table = Table(rows, colWidths=col_widths)
    table.setStyle(TableStyle([
        ('BACKGROUND', (0, 0), (-1, 0), colors.HexColor('#1a237e')),
        ('TEXTCOLOR', (0, 0), (-1, 0), colors.white),
        ('FONTNAME', (0, 0), (-1, -1), 'Helvetica'),
        ('FONTSIZE', (0, 0), (-1, -1), 10),
        ('ALIGN', (0, 0), (-1, -1), 'LEFT'),
        ('BOTTOMPADDING', (0, 0), (-1, -1), 6),
        ('TOPPADDING', (0, 0), (-1, -1), 6),
        ('ROWBACKGROUNDS', (0, 1), (-1, -1), [colors.HexColor('#f5f7fa'), colors.white]),
        ('GRID', (0, 0), (-1, -1), 0.5, colors.HexColor('#e3e6ee')),
    ]))
    return table


def export_pdf(report: CertReport, path) -> Path:
    """Write a PDF certificate: verdict, checks, census with chart, transitivity, lemmas."""
    path = Path(path)
    doc = SimpleDocTemplate(str(path), pagesize=A4)
    styles = getSampleStyleSheet()
    styles['Title'].textColor = colors.HexColor('#1a237e')
    footer_style = ParagraphStyle('Footer', parent=styles['Normal'], fontSize=9,
                                  alignment=TA_CENTER, textColor=colors.grey)
    story = [Paragraph("Heawood Graph Certification", styles['Title']), Spacer(1, 8)]
    s = report.graph_summary
    story.append(Paragraph(f"<b>Graph:</b> {s['vertices']} vertices, {s['edges']} edges, girth {s['girth']}",
                           styles['Normal']))
    story.append(Paragraph(f"<b>Verdict:</b> {_mark(report.passed)}", styles['Normal']))
    story.append(Spacer(1, 14))

    story.append(_table([["Check", "Result", "Detail"]]
                        + [[c.name, _mark(c.passed), c.detail] for c in report.checks],
                        [2.4 * inch, 0.7 * inch, 3.4 * inch]))
    story.append(Spacer(1, 14))

    census_rows = [["Length", "Depth-first", "Zeon", "Stated"]]
    stated = {row["length"]: row["stated"] for row in report.reference_comparison}
    for k in sorted(set(report.census_dfs) | set(report.census_zeon)):
        census_rows.append([str(k), str(report.census_dfs.get(k, 0)), str(report.census_zeon.get(k, 0)),
                            str(stated.get(k, 0))])
    story.append(Paragraph("<b>Cycle Census</b>", styles['Normal']))
    story.append(_table(census_rows, [1.2 * inch] * 4))
    story.append(Spacer(1, 10))
    story.append(Image(census_chart(report), width=6 * inch, height=3 * inch))
    story.append(Spacer(1, 14))

    story.append(Paragraph("<b>Transitivity</b>", styles['Normal']))
    story.append(_table([["Family", "Objects", "Orbit sizes", "Stabilizers"]]
                        + [[e['family'], str(e['size']), str(e['orbit_sizes']), str(e['stabilizer_orders'])]
                           for e in report.transitivity],
                        [2.2 * inch, 1.0 * inch, 1.6 * inch, 1.6 * inch]))
    story.append(Spacer(1, 14))

    story.append(Paragraph("<b>Lemmas</b>", styles['Normal']))
    story.append(_table([["Lemma", "Passed", "Instances"]]
                        + [[lemma, str(c['passed']), str(c['instances'])]
                           for lemma, c in report.lemma_summary().items()],
                        [2.4 * inch, 1.2 * inch, 1.2 * inch]))

    story.append(Spacer(1, 20))
    story.append(Paragraph(f"Generated: {datetime.now().strftime('%B %d, %Y at %I:%M %p')}", footer_style))
    doc.build(story)
    logger.info(f"Certification PDF written to {path}")
    return path
