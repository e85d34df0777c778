import logging
import os
import sys

# Add the project root to sys.path to allow 'from modules...' imports
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from modules.config import RunConfig, list_graph_files, load_graph_file, load_settings
from modules.coxeter import CoxeterError, find_induced_square, find_separating_vertex, is_hyperbolic, is_reduced_system, parse_word
from modules.utils import dump_json, to_jsonable

COMMANDS = ("growth", "classify", "verify", "expand", "mult", "khintchine", "crossover", "hypotheses", "graphs")

# flag -> (RunConfig field, converter)
FLAGS = {
    "--graph": ("graph_path", str),
    "--q": ("q", float),
    "--N": ("ball_radius", int),
    "--tol": ("tol", float),
    "--format": ("format", str),
    "--output": ("output", str),
    "--variant": ("variant", str),
    "--p": ("p", float),
    "--word": ("word", str),
    "--d": ("d", int),
    "--K": ("K", int),
}

DEFAULT_K = 12

USAGE = """Usage: python app.py <command> [args] [options]
Commands:
  growth                 Word counts a_k, growth rate rho and the factoriality interval
  classify               Factor / FactorPlusC / boundary at --q
  verify <suite|all>     Run a verification suite (exit 1 on failure)
  expand <word>          Creation-projection-annihilation terms of T_w
  mult <a> <b>           Exact product in the Hecke algebra, e.g. mult [s] [s]
  khintchine <d>         Component counts and the diagonal family at block length d
  crossover              Smallest block length d* contradicting injectivity
  hypotheses             Reducedness, |S| >= 3, hyperbolicity, q in [rho, 1/rho], separating vertex
  graphs                 List the shipped graph files
Options:
  --graph PATH|NAME  --q REAL  --N INT  --tol REAL  --format {json,csv,text}
  --output PATH  --variant {free3,rst}  --p REAL  --word WORD  --d INT  --K INT
  --quiet  -h, --help
Environment:
  HECKE_MAX_BALL overrides the ball enumeration cap."""


class UsageError(Exception):
    pass


def parse_args(argv):
    """
    Splits argv into (command, positional, overrides, quiet). Words may be
    given bracketed and unquoted, e.g. `expand [t r s]`.
    """
    if not argv:
        raise UsageError("No command given")
    command, rest = argv[0], list(argv[1:])
    if command not in COMMANDS:
        raise UsageError(f"Unknown command: {command}")

    positional, overrides, quiet = [], {}, False
    i = 0
    while i < len(rest):
        token = rest[i]
        if token == "--quiet":
            quiet = True
        elif token in FLAGS:
            if i + 1 >= len(rest):
                raise UsageError(f"Missing value after {token}")
            field, convert = FLAGS[token]
            try:
                overrides[field] = convert(rest[i + 1])
            except ValueError:
                raise UsageError(f"Invalid value for {token}: {rest[i + 1]}")
            i += 1
        elif token.startswith("--"):
            raise UsageError(f"Unknown option: {token}")
        else:
            positional.append(token)
        i += 1
    return command, _join_brackets(positional), overrides, quiet


def _join_brackets(tokens):
    # "[t", "r", "s]" -> "[t r s]"
    out, buffer = [], None
    for tok in tokens:
        if buffer is not None:
            buffer.append(tok)
            if tok.endswith("]"):
                out.append(" ".join(buffer))
                buffer = None
        elif tok.startswith("[") and not tok.endswith("]"):
            buffer = [tok]
        else:
            out.append(tok)
    if buffer is not None:
        raise UsageError(f"Unclosed word: {' '.join(buffer)}")
    return out


def _csv(payload) -> str:
    """Flat key,value lines; lists of dicts become one row per entry."""
    data = to_jsonable(payload)
    if isinstance(data, list) and data and isinstance(data[0], dict):
        keys = list(data[0])
        lines = [",".join(keys)]
        lines.extend(",".join(_cell(row.get(k)) for k in keys) for row in data)
        return "\n".join(lines) + "\n"
    if isinstance(data, dict):
        return "key,value\n" + "".join(f"{k},{_cell(v)}\n" for k, v in data.items())
    return f"{_cell(data)}\n"


def _cell(value) -> str:
    if isinstance(value, (list, dict)):
        value = dump_json(value).replace("\n", " ")
    text = "" if value is None else str(value)
    return f'"{text}"' if "," in text or '"' in text else text


def render(payload, fmt: str, text=None, csv=None) -> str:
    if fmt == "text":
        return text if text is not None else dump_json(payload) + "\n"
    if fmt == "csv":
        return csv if csv is not None else _csv(payload)
    return dump_json(payload) + "\n"


def _need(positional, count, usage):
    if len(positional) < count:
        raise UsageError(f"Usage: {usage}")
    return positional[:count]


def cmd_growth(graph, config, positional, extra):
    from modules.growth import growth_report

    report = growth_report(graph, extra.get("K", DEFAULT_K), config.tol)
    return 0, render(report.to_dict(), config.format, report.to_text(), report.to_csv())


def cmd_classify(graph, config, positional, extra):
    from modules.growth import factor_classification

    result = factor_classification(graph, config.q, config.tol)
    return 0, render(result.to_dict(), config.format, f"{result}\n")


def cmd_verify(graph, config, positional, extra):
    from modules.suites import SuiteExecutor, SuiteRegistry, overall_status

    (name,) = _need(positional, 1, "verify <suite|all>")
    registry = SuiteRegistry.get_instance()
    executor = SuiteExecutor(registry)
    if name == "all":
        outcomes = executor.run_all(graph, config)
    else:
        if registry.get_suite(name) is None:
            raise UsageError(f"Unknown suite: {name} (known: {', '.join(registry.names())}, all)")
        outcomes = executor.run([name], graph, config)

    status = overall_status(outcomes)
    rows = [r for o in outcomes for r in o["results"]]
    text_lines = []
    for o in outcomes:
        marker = "[PASS]" if o["status"] == "success" else "[FAIL]"
        text_lines.append(f"{marker} {o['suite']} ({o['status']})")
        for r in o["results"]:
            text_lines.append(f"    {r['lemma']}: {r['cases_checked']} cases, {r['failure_count']} failures")
        if o.get("error"):
            text_lines.append(f"    error: {o['error']}")
    summary = [
        {"lemma": r["lemma"], "graph": r["graph"], "cases_checked": r["cases_checked"], "failures": r["failure_count"]}
        for r in rows
    ]
    payload = {"status": status, "suites": outcomes}
    output = render(payload, config.format, "\n".join(text_lines) + "\n", _csv(summary))
    return (0 if status == "success" else 1), output


def cmd_expand(graph, config, positional, extra):
    from modules.hecke import enumerate_Aw, t_expansion

    text_word = positional[0] if positional else config.word
    if not text_word:
        raise UsageError("Usage: expand <word>")
    w = parse_word(text_word, graph)
    triples = enumerate_Aw(w, graph)
    terms = t_expansion(w, graph)
    payload = {
        "word": f"[{w}]",
        "triples": [str(t) for t in triples],
        "terms": [t.describe() for t in terms],
    }
    text = f"T_[{w}] =\n" + "".join(f"  + {t.describe()}\n" for t in terms)
    return 0, render(payload, config.format, text)


def cmd_mult(graph, config, positional, extra):
    from modules.hecke import hecke_multiply, parse_element

    left, right = _need(positional, 2, "mult <a> <b>")
    a, b = parse_element(left, graph), parse_element(right, graph)
    product = hecke_multiply(a, b, graph)
    payload = {"left": str(a), "right": str(b), "product": str(product)}
    return 0, render(payload, config.format, f"{product}\n")


def cmd_khintchine(graph, config, positional, extra):
    from modules.coxeter import PreconditionError
    from modules.khintchine import diagonal_family, jd_general, summand_count

    try:
        d = int(positional[0]) if positional else config.d
    except ValueError:
        raise UsageError(f"d must be an integer, got {positional[0]}")
    if d < 0:
        raise UsageError(f"d must be nonnegative, got {d}")
    payload = {"graph": str(graph), "d": d, "summand_count": summand_count(graph, d)}
    if config.word:
        letters = parse_word(config.word, graph).letters
        components = jd_general(letters, graph)
        payload["word"] = f"[{' '.join(letters)}]"
        payload["components"] = [c.describe() for c in components if c.admissible]
        payload["component_count"] = len(components)
    try:
        family = diagonal_family(graph, d, config.variant)
        payload["family"] = family.to_dict()
    except PreconditionError as e:
        payload["family"] = None
        payload["family_error"] = str(e)
    return 0, render(payload, config.format)


def cmd_crossover(graph, config, positional, extra):
    from modules.hecke import p_value
    from modules.khintchine import RST, crossover_report

    p = config.p
    if p is None:
        # q and 1/q give the same algebra, so the bound only sees |p|
        p = abs(p_value(config.q))
        logging.getLogger("CLI").info(f"crossover: p = {p} from q = {config.q}")
    s_count = 3 if config.variant == RST else len(graph.generators)
    report = crossover_report(p, s_count, config.variant)
    return 0, render(report, config.format, f"d* = {report['d_star']}\n")


def hypotheses(graph, q: float, tol: float) -> dict:
    from modules.coxeter import PreconditionError
    from modules.growth import BOUNDARY, FACTOR, NOT_APPLICABLE, factor_classification

    classification = factor_classification(graph, q, tol)
    try:
        separating = find_separating_vertex(graph)
    except PreconditionError:
        separating = None
    square = find_induced_square(graph)
    return {
        "graph": str(graph),
        "reduced": is_reduced_system(graph),
        "at_least_three_generators": len(graph.generators) >= 3,
        "hyperbolic": is_hyperbolic(graph),
        "induced_square": list(square) if square else None,
        "q": q,
        "q_in_interval": None if classification.label == NOT_APPLICABLE else classification.label in (FACTOR, BOUNDARY),
        "separating_vertex": separating,
    }


def cmd_hypotheses(graph, config, positional, extra):
    payload = hypotheses(graph, config.q, config.tol)
    text = "".join(f"{k}: {v}\n" for k, v in payload.items())
    return 0, render(payload, config.format, text)


def cmd_graphs(graph, config, positional, extra):
    names = list_graph_files()
    return 0, render({"graphs": names}, config.format, "\n".join(names) + "\n")


HANDLERS = {
    "growth": cmd_growth,
    "classify": cmd_classify,
    "verify": cmd_verify,
    "expand": cmd_expand,
    "mult": cmd_mult,
    "khintchine": cmd_khintchine,
    "crossover": cmd_crossover,
    "hypotheses": cmd_hypotheses,
    "graphs": cmd_graphs,
}


def execute(command, positional, config, extra=None):
    """Runs a parsed command. Returns (exit status, rendered report)."""
    graph = None if command == "graphs" else load_graph_file(config.graph_path)
    return HANDLERS[command](graph, config, positional, extra or {})


def _write(output, path):
    if path:
        with open(path, "w", encoding="utf-8") as f:
            f.write(output)
        print(f"[System] Report written to {path}")
    else:
        sys.stdout.write(output)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    if not argv or "--help" in argv or "-h" in argv:
        print(USAGE)
        return 0

    try:
        command, positional, overrides, quiet = parse_args(argv)
    except UsageError as e:
        print(f"[Error] {e}", file=sys.stderr)
        print(USAGE, file=sys.stderr)
        return 2

    logging.basicConfig(level=logging.WARNING if quiet else logging.INFO)
    logger = logging.getLogger("CLI")

    extra = {"K": overrides.pop("K")} if "K" in overrides else {}
    try:
        config = RunConfig.from_settings(load_settings(), quiet=quiet, **overrides)
        status, output = execute(command, positional, config, extra)
    except UsageError as e:
        print(f"[Error] {e}", file=sys.stderr)
        return 2
    except CoxeterError as e:
        logger.error(f"{command} failed: {e}")
        print(f"[Error] {e}", file=sys.stderr)
        return 2

    _write(output, config.output)
    return status


if __name__ == "__main__":
    sys.exit(main())
