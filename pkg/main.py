import argparse, json, sys, traceback
from typing import Optional

from pydantic import ValidationError

import settings
from logger import cli_logger, set_verbose
from sham import DomainError, ParseError, UsageError
from sham.jobs import JobSpec, Report, parse_stdin, render_text, report_schema, run

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


def _emit(report: Report, fmt: str):
    if fmt == "json":
        print(json.dumps(report.model_dump(), ensure_ascii=False, indent=2))
    else:
        print(render_text(report))


def _job(args, command: str, **fields) -> JobSpec:
    """命令行参数与 --stdin 合并成 JobSpec；命令行显式给出的值优先。"""
    values = {k: v for k, v in fields.items() if v is not None}
    if getattr(args, "stdin", False):
        for key, value in parse_stdin(sys.stdin.read()).items():
            values.setdefault(key, value)
    for name in ("order", "max_degree", "format"):
        value = getattr(args, name, None)
        if value is not None:
            values[name] = value
    if getattr(args, "extended", False):
        values["extended"] = True
    return JobSpec(command=command, **values)


def _run(args, command: str, **fields) -> int:
    job = _job(args, command, **fields)
    report = run(job)
    _emit(report, job.format)
    return EXIT_OK


def cmd_simple(args) -> int:
    return _run(args, "simple", a=args.a, b=args.b)


def cmd_isotropy(args) -> int:
    return _run(args, "isotropy", a=args.a, b=args.b)


def cmd_crosscheck(args) -> int:
    return _run(args, "crosscheck", a=args.a, b=args.b)


def cmd_commute(args) -> int:
    return _run(args, "commute", a=args.a, b=args.b, derivation=args.derivation,
                auto=args.auto, pair=args.pair)


def cmd_conjugate(args) -> int:
    return _run(args, "conjugate", a=args.a, b=args.b, derivation=args.derivation, auto=args.auto)


def cmd_flow(args) -> int:
    return _run(args, "flow", a=args.a, b=args.b, derivation=args.derivation,
                point=args.point, f=args.f)


def cmd_stable(args) -> int:
    return _run(args, "stable", a=args.a, b=args.b, derivation=args.derivation, f=args.f)


def cmd_singular(args) -> int:
    return _run(args, "singular", a=args.a, b=args.b, derivation=args.derivation)


def cmd_schema(args) -> int:
    print(json.dumps(report_schema(), ensure_ascii=False, indent=2))
    return EXIT_OK


def parse_args(argv: list[str]):
    parser = argparse.ArgumentParser(description="Shamsuddin 导子与迷向群计算工具")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=None,
                        help=f"输出格式 (默认 {settings.OUTPUT_FORMAT}，可由 SHAM_OUTPUT_FORMAT 设置)")
    common.add_argument("--stdin", action="store_true", help="从标准输入读取 key: value 形式的多项式输入")
    common.add_argument("--max-degree", dest="max_degree", type=int, default=None,
                        help=f"未知多项式的次数上限 (默认 {settings.MAX_DEGREE})")
    common.add_argument("-v", "--verbose", action="store_true", help="所有类别日志输出 DEBUG 到 stderr")

    sham_args = argparse.ArgumentParser(add_help=False)
    sham_args.add_argument("--a", type=str, help="Shamsuddin 导子中 y 的系数 a(x)")
    sham_args.add_argument("--b", type=str, help="Shamsuddin 导子中的常数项 b(x)")

    deriv_args = argparse.ArgumentParser(add_help=False)
    deriv_args.add_argument("--derivation", type=str, help='通用导子 "a, b"，表示 a*dx + b*dy')

    sub = parser.add_subparsers(dest="command")

    p_simple = sub.add_parser("simple", parents=[common, sham_args], help="判定 Shamsuddin 导子是否单纯")
    p_simple.set_defaults(func=cmd_simple)

    p_iso = sub.add_parser("isotropy", parents=[common, sham_args], help="计算迷向群 Aut(D)")
    p_iso.add_argument("--extended", action="store_true", help="a 为非零常数且 deg b >= 1 时给出含平移的完整族")
    p_iso.set_defaults(func=cmd_isotropy)

    p_cross = sub.add_parser("crosscheck", parents=[common, sham_args], help="用两个独立求解器交叉验证单纯性与平凡迷向群")
    p_cross.add_argument("--extended", action="store_true", help="同 isotropy --extended")
    p_cross.set_defaults(func=cmd_crosscheck)

    p_commute = sub.add_parser("commute", parents=[common, sham_args, deriv_args], help="检验自同构与导子是否交换")
    p_commute.add_argument("--auto", type=str, help="生成元字，如 'elemY(x^2; 1) * affine(0, 1, 1, 0; 0, 0)'")
    p_commute.add_argument("--pair", type=str, help='候选自同态 "f, g"')
    p_commute.set_defaults(func=cmd_commute)

    p_conj = sub.add_parser("conjugate", parents=[common, sham_args, deriv_args], help="计算共轭导子 ρDρ⁻¹")
    p_conj.add_argument("--auto", type=str, help="生成元字")
    p_conj.set_defaults(func=cmd_conjugate)

    p_flow = sub.add_parser("flow", parents=[common, sham_args, deriv_args], help="过一点的形式幂级数解")
    p_flow.add_argument("--point", type=str, help='基点 "p1, p2"')
    p_flow.add_argument("--order", type=int, default=None, help=f"截断阶数 N (默认 {settings.SERIES_ORDER})")
    p_flow.add_argument("--f", type=str, help="可选：沿解求值的多项式")
    p_flow.set_defaults(func=cmd_flow)

    p_stable = sub.add_parser("stable", parents=[common, sham_args, deriv_args], help="检验主理想 (f) 是否 D-稳定")
    p_stable.add_argument("--f", type=str, help="生成元 f")
    p_stable.set_defaults(func=cmd_stable)

    p_sing = sub.add_parser("singular", parents=[common, sham_args, deriv_args], help="在代数闭包上证明有无奇点")
    p_sing.set_defaults(func=cmd_singular)

    p_schema = sub.add_parser("schema", help="输出结构化报告的 JSON schema")
    p_schema.set_defaults(func=cmd_schema)

    return parser, parser.parse_args(argv)


def main(argv: Optional[list[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        parser, args = parse_args(argv)
    except SystemExit as e:
        # argparse 用法错误退出码为 2，--help 为 0
        return EXIT_OK if not e.code else EXIT_USAGE
    if not args.command:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    if getattr(args, "verbose", False):
        set_verbose()
    try:
        return args.func(args)
    except (ParseError, UsageError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as e:
        print(f"error: invalid input\n{e}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except Exception as e:  # pragma: no cover
        cli_logger.exception(f"unexpected failure in {args.command}")
        if settings.DEBUG:
            traceback.print_exc()
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main(sys.argv[1:]))
