import ast
from pathlib import Path
import re
import sys

ROOT = Path(__file__).resolve().parents[1]
SRC = ROOT / "src" / "frechet_ann"


def third_party_imports():
    found = set()
    for path in list(SRC.glob("*.py")) + list(SRC.glob("*.pyx")):
        text = path.read_text()
        if path.suffix == ".pyx":
            text = "\n".join(line.strip() for line in text.splitlines()
                             if re.match(r"\s*(import|from)\s", line) and " cimport " not in line
                             and not line.strip().startswith("cimport"))
        for node in ast.walk(ast.parse(text)):
            if isinstance(node, ast.Import):
                names = [a.name for a in node.names]
            elif isinstance(node, ast.ImportFrom) and node.level == 0:
                names = [node.module]
            else:
                continue
            for name in names:
                top = name.split(".")[0]
                if top not in sys.stdlib_module_names and top != "frechet_ann":
                    found.add(top)
    return found


def test_runtime_dependencies_match_imports():
    text = (ROOT / "pyproject.toml").read_text()
    assert re.search(r'^name = "artifact"$', text, re.M)
    deps = re.search(r"^dependencies = \[(.*?)\]", text, re.M | re.S).group(1)
    declared = {re.split(r"[<>=!~ ]", d)[0].lower() for d in re.findall(r'"([^"]+)"', deps)}
    assert third_party_imports() == declared
