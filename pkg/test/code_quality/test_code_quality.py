"""Code quality gates

Ruff must report nothing for app/, test/ and scripts/, and every Python file
must compile. A false positive is suppressed in place with a # noqa comment
naming the rule.
"""

import shutil
import subprocess
from pathlib import Path

import pytest

CHECK_DIRS = ["app", "test", "scripts"]


@pytest.fixture
def project_root() -> Path:
    return Path(__file__).parent.parent.parent


@pytest.fixture
def ruff_executable(project_root) -> str:
    """ruff from the project venv, else from PATH"""
    venv_ruff = project_root / ".venv" / "bin" / "ruff"
    if venv_ruff.exists():
        return str(venv_ruff)
    found = shutil.which("ruff")
    if found is None:
        pytest.skip("ruff not found - install the dev extras")
    return found


def _python_files(root: Path):
    for directory in CHECK_DIRS:
        path = root / directory
        if path.exists():
            yield from path.rglob("*.py")


def test_no_linting_errors(project_root, ruff_executable):
    existing = [d for d in CHECK_DIRS if (project_root / d).exists()]
    result = subprocess.run(
        [ruff_executable, "check", *existing, "--output-format=concise", "--no-fix"],
        cwd=project_root,
        capture_output=True,
        text=True,
    )
    if result.returncode != 0:
        pytest.fail(
            "\n".join(
                [
                    "Linting errors:",
                    result.stdout,
                    f"Fix with: {ruff_executable} check {' '.join(existing)} --fix",
                    "Suppress a false positive with # noqa: <rule>",
                ]
            )
        )


def test_ruff_configuration_exists(project_root):
    content = (project_root / "pyproject.toml").read_text()
    assert "[tool.ruff]" in content


def test_no_syntax_errors(project_root):
    errors = []
    for py_file in _python_files(project_root):
        try:
            compile(py_file.read_text(), str(py_file), "exec")
        except SyntaxError as e:
            errors.append(f"{py_file}: {e}")
    assert not errors, "\n".join(["Syntax errors:"] + errors)
