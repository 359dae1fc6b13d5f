import logging
import os

logger = logging.getLogger(__name__)


def _table(header: list[str], rows: list[list]) -> str:
    out = "| " + " | ".join(header) + " |\n"
    out += "|" + "---|" * len(header) + "\n"
    for row in rows:
        out += "| " + " | ".join(str(cell) for cell in row) + " |\n"
    return out + "\n"


def generate_markdown_report(verification_results: dict, filename: str = "verification_report.md") -> str:
    """Generates a Markdown report from ``VerificationResult.to_dict()`` output.

    Returns the path written.
    """
    directory = os.path.dirname(filename)
    if directory:
        os.makedirs(directory, exist_ok=True)

    summary = verification_results.get("summary", {})
    with open(filename, "w", encoding="utf-8") as f:
        f.write("# Verification Report\n\n")
        f.write("## Summary\n\n")
        f.write(f"- **Comparisons:** {summary.get('comparisons', 0)}\n")
        f.write(f"- **Mismatches:** {summary.get('mismatches', 0)}\n")
        f.write(f"- **Check Reports:** {summary.get('check_reports', 0)}\n")
        f.write(f"- **Failing Checks:** {summary.get('check_failures', 0)}\n")
        f.write(f"- **Result:** {'PASS' if summary.get('ok') else 'FAIL'}\n")
        if summary.get("timestamp"):
            f.write(f"- **Timestamp:** {summary['timestamp']}\n")
        f.write("\n")

        claims = verification_results.get("claims", [])
        if claims:
            f.write("## Claims\n\n")
            header = ["Claim", "Pass", "Fail", "Not Applicable", "Tight"]
            rows = [
                [c.get("claim"), c.get("pass", 0), c.get("fail", 0), c.get("not_applicable", 0), c.get("tight", 0)]
                for c in claims
            ]
            f.write(_table(header, rows))

        mismatches = verification_results.get("mismatches", [])
        f.write("## Mismatches\n\n")
        if mismatches:
            header = ["Family", "Param", "Field", "Expected", "Got"]
            rows = [[m.get("family"), m.get("param"), m.get("field"), m.get("expected"), m.get("got")] for m in mismatches]
            f.write(_table(header, rows))
        else:
            f.write("_None._\n\n")

        failures = verification_results.get("failures", [])
        f.write("## Failing Checks\n\n")
        if failures:
            for failure in failures:
                f.write(f"### {failure.get('check_id')} on `{failure.get('graph')}`\n\n")
                f.write(f"- **Relation:** {failure.get('lhs')} {failure.get('relation')} {failure.get('rhs')}\n")
                if failure.get("lower") is not None:
                    f.write(f"- **Lower Bound:** {failure['lower']}\n")
                f.write(f"- **Witness:** {failure.get('witness') or 'N/A'}\n")
                f.write(f"- **Details:** {failure.get('detail') or 'N/A'}\n\n")
        else:
            f.write("_None._\n\n")

    logger.info(f"Verification report written to {filename}")
    return filename
