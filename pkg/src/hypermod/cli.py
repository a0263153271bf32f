"""Command-line client for the hypermod service.

Every subcommand is a thin wrapper over one HTTP endpoint.  By default the
client talks to an in-process instance of the service (no server required);
pass ``--url`` to query a running deployment instead.  Machine-readable JSON
goes to stdout, diagnostics to stderr.  Exit codes: 0 success, 1 domain error
or failed verification, 2 usage/parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

import httpx

PARSE_ERROR = 2
DOMAIN_ERROR = 1


def _client(url: Optional[str]) -> httpx.Client:
    if url:
        return httpx.Client(base_url=url)
    from .service import app

    return httpx.Client(transport=httpx.ASGITransport(app=app), base_url="http://hypermod.local")


def _print_json(data, compact: bool) -> None:
    if compact:
        print(json.dumps(data, separators=(",", ":"), sort_keys=True))
    else:
        print(json.dumps(data, indent=2, sort_keys=True))


def _parse_json_arg(text: str, what: str) -> object:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        print(f"could not parse {what}: {exc}", file=sys.stderr)
        raise SystemExit(PARSE_ERROR)


def _request(client: httpx.Client, method: str, path: str, payload=None):
    try:
        response = client.request(method, path, json=payload)
    except httpx.HTTPError as exc:
        print(f"request failed: {exc}", file=sys.stderr)
        raise SystemExit(DOMAIN_ERROR)
    if response.status_code >= 400:
        try:
            detail = response.json().get("detail", response.text)
        except ValueError:
            detail = response.text
        print(f"error: {detail}", file=sys.stderr)
        raise SystemExit(DOMAIN_ERROR)
    return response.json()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypermod",
        description="Exact equivariant-module data on 2x2x2 hypermatrices.",
    )
    parser.add_argument("--url", help="base URL of a running service (default: in-process)")
    parser.add_argument(
        "--json",
        action="store_true",
        help="compact single-line JSON output (default: indented)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mult", help="multiplicity of a weight in a named character")
    p.add_argument("--module", required=True, help="S, SymV, E, S_h or S_h_sqrt")
    p.add_argument("--weight", required=True, help='e.g. [[2,2],[2,2],[2,2]]')

    p = sub.add_parser("simple-mult", help="multiplicity of a weight in a simple module")
    p.add_argument("--simple", required=True, help="S, E, D1, D122, D212, D221, D5 or G6")
    p.add_argument("--weight", required=True)

    p = sub.add_parser("dump", help="all nonzero multiplicities over a window")
    p.add_argument("--module", required=True)
    p.add_argument("--box", required=True, help="entry bounds as [lo,hi]")

    p = sub.add_parser("euler", help="pushforward Euler-characteristic multiplicity")
    p.add_argument("--weight", required=True)

    p = sub.add_parser("quiver", help="path-space queries on the category quiver")
    qsub = p.add_subparsers(dest="quiver_command", required=True)
    qp = qsub.add_parser("paths", help="residue classes of paths between two vertices")
    qp.add_argument("--from", dest="source", required=True)
    qp.add_argument("--to", dest="target", required=True)
    qp.add_argument("--cap", type=int, default=6, help="length cap (default 6)")
    qsub.add_parser("check", help="run the quiver's structural self-checks")

    p = sub.add_parser("lc", help="iterated local cohomology")
    p.add_argument("--module", required=True)
    p.add_argument("--supports", required=True, help="comma list, innermost first, e.g. O1,O0")

    p = sub.add_parser("classify", help="orbit classification of a tensor")
    p.add_argument("--tensor", required=True, help="path to a JSON tensor file")

    p = sub.add_parser("verify", help="run verification targets")
    p.add_argument("target", nargs="?", default="all")
    p.add_argument("--dmax", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)

    sub.add_parser("witness-table", help="the eight witness weights")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    compact = args.json
    with _client(args.url) as client:
        if args.command == "mult":
            weight = _parse_json_arg(args.weight, "--weight")
            data = _request(client, "POST", "/mult", {"module": args.module, "weight": weight})
            _print_json(data, compact)

        elif args.command == "simple-mult":
            weight = _parse_json_arg(args.weight, "--weight")
            data = _request(
                client, "POST", "/simple-mult", {"simple": args.simple, "weight": weight}
            )
            _print_json(data, compact)

        elif args.command == "dump":
            box = _parse_json_arg(args.box, "--box")
            if not (isinstance(box, list) and len(box) == 2 and all(isinstance(x, int) for x in box)):
                print("--box must be a two-element integer list, e.g. [-2,0]", file=sys.stderr)
                return PARSE_ERROR
            data = _request(
                client, "POST", "/dump", {"module": args.module, "lo": box[0], "hi": box[1]}
            )
            _print_json(data, compact)

        elif args.command == "euler":
            weight = _parse_json_arg(args.weight, "--weight")
            data = _request(client, "POST", "/euler", {"weight": weight})
            _print_json(data, compact)

        elif args.command == "quiver":
            if args.quiver_command == "paths":
                data = _request(
                    client,
                    "POST",
                    "/quiver/paths",
                    {"source": args.source, "target": args.target, "length_cap": args.cap},
                )
                _print_json({"dim": data["dim"], "paths": data["paths"]}, compact)
            else:
                data = _request(client, "GET", "/quiver/check")
                _print_json(data, compact)
                if not data["passed"]:
                    return DOMAIN_ERROR

        elif args.command == "lc":
            supports = [z for z in args.supports.split(",") if z]
            data = _request(
                client, "POST", "/lc", {"module": args.module, "supports": supports}
            )
            _print_json(data["entries"], compact)

        elif args.command == "classify":
            try:
                with open(args.tensor) as fh:
                    tensor = json.load(fh)
            except OSError as exc:
                print(f"cannot read tensor file: {exc}", file=sys.stderr)
                return DOMAIN_ERROR
            except json.JSONDecodeError as exc:
                print(f"could not parse tensor file: {exc}", file=sys.stderr)
                return PARSE_ERROR
            data = _request(client, "POST", "/classify", {"tensor": tensor})
            _print_json({"orbit": data["orbit"]}, compact)

        elif args.command == "verify":
            data = _request(
                client,
                "POST",
                "/verify",
                {"target": args.target, "dmax": args.dmax, "seed": args.seed},
            )
            _print_json(data, compact)
            for result in data["results"]:
                status = "pass" if result["passed"] else "FAIL"
                print(f"{status}  {result['target']}", file=sys.stderr)
            if not data["passed"]:
                return DOMAIN_ERROR

        elif args.command == "witness-table":
            data = _request(client, "GET", "/witness-table")
            _print_json(data, compact)

    return 0


if __name__ == "__main__":
    sys.exit(main())
