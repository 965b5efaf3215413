import json
import pandas as pd
from dataclasses import asdict, dataclass, field
from typing import List, Dict, Any, Optional
from datetime import datetime
from pathlib import Path

from config.settings import REPORT_DIR
from utils.logger import KnotClusterLogger

# Initialize logger
logger = KnotClusterLogger("report-generator")


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: str = ""
    duration_ms: int = 0


@dataclass
class VerifyReport:
    """Outcome of every check run on one diagram"""

    diagram: str
    crossings: int = 0
    components: int = 0
    checks: List[CheckResult] = field(default_factory=list)
    info: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def add(self, name: str, passed: bool, witness: str = "", duration_ms: int = 0) -> CheckResult:
        result = CheckResult(name, bool(passed), "" if passed else witness, duration_ms)
        self.checks.append(result)
        logger.log_check(name, result.passed, result.witness or None, duration_ms)
        return result

    def to_dict(self) -> Dict[str, Any]:
        return {
            "diagram": self.diagram,
            "crossings": self.crossings,
            "components": self.components,
            "passed": self.passed,
            "info": self.info,
            "checks": [asdict(check) for check in self.checks],
        }


def generate_report(
    reports: List[VerifyReport],
    output_format: str = "excel",
    output_path: Optional[str] = None
) -> str:
    """
    Write verification reports to a file

    Args:
        reports: one report per diagram
        output_format: 'excel', 'text' or 'json'
        output_path: Path to save the report (optional)

    Returns:
        Path to the generated report
    """
    if not reports:
        logger.warning("No verification results to report")
        return ""

    reports_dir = Path(REPORT_DIR)
    reports_dir.mkdir(parents=True, exist_ok=True)

    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    extension = {"excel": "xlsx", "text": "txt", "json": "json"}.get(output_format.lower())
    if extension is None:
        raise ValueError(f"Unknown report format: {output_format}")
    if not output_path:
        output_path = str(reports_dir / f"verify_report_{timestamp}.{extension}")

    rows = []
    for report in reports:
        for check in report.checks:
            rows.append({
                "Diagram": report.diagram,
                "Crossings": report.crossings,
                "Components": report.components,
                "Check": check.name,
                "Passed": check.passed,
                "Witness": check.witness,
                "Duration (ms)": check.duration_ms
            })

    if extension == "xlsx":
        return generate_excel_report(rows, output_path)
    if extension == "json":
        return generate_json_report(reports, output_path)
    return generate_text_report(reports, output_path)


def generate_excel_report(rows: List[Dict[str, Any]], output_path: str) -> str:
    """Generate Excel report"""
    df = pd.DataFrame(rows)
    df.to_excel(output_path, index=False, sheet_name="Checks", engine="openpyxl")
    logger.info(f"Excel report generated: {output_path}")
    return output_path


def generate_json_report(reports: List[VerifyReport], output_path: str) -> str:
    with open(output_path, "w", encoding="utf-8") as f:
        json.dump([report.to_dict() for report in reports], f, indent=2)
    logger.info(f"JSON report generated: {output_path}")
    return output_path


def render_text(reports: List[VerifyReport]) -> str:
    lines = ["VERIFICATION REPORT", "=" * 80, ""]
    for report in reports:
        status = "PASS" if report.passed else "FAIL"
        lines.append(f"{report.diagram} ({report.crossings} crossings, {report.components} components): {status}")
        lines.append("-" * 40)
        for key, value in report.info.items():
            lines.append(f"  {key}: {value}")
        for check in report.checks:
            mark = "ok  " if check.passed else "FAIL"
            line = f"  {mark} {check.name}"
            if check.witness:
                line += f"  [{check.witness}]"
            lines.append(line)
        lines.append("")
    return "\n".join(lines)


def generate_text_report(reports: List[VerifyReport], output_path: str) -> str:
    """Generate text report"""
    with open(output_path, 'w', encoding='utf-8') as f:
        f.write(render_text(reports))
    logger.info(f"Text report generated: {output_path}")
    return output_path
