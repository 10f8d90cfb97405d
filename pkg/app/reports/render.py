import json

from app.reports.models import RunReport


def render_json(report: RunReport) -> str:
    return json.dumps(report.model_dump(mode="json"), indent=2, sort_keys=True)


def render_text(report: RunReport) -> str:
    lines = [f"{report.command}  {report.input_digest}"]
    if report.seed is not None:
        lines.append(f"seed {report.seed}")
    for v in report.verdicts:
        mark = "PASS" if v.passed else "FAIL"
        name = f"{v.instance}:{v.check}" if v.instance else v.check
        lines.append(f"[{mark}] {name}")
        for key, value in sorted(v.details.items()):
            lines.append(f"    {key}: {value}")
        if v.witness is not None:
            lines.append(f"    witness: {v.witness}")
    passed = sum(v.passed for v in report.verdicts)
    lines.append(f"{passed}/{len(report.verdicts)} checks passed")
    if report.wall_time is not None:
        lines.append(f"wall time {report.wall_time:.3f}s")
    return "\n".join(lines) + "\n"
