"""Thin command-line client for the palinkit service.

Every command talks to the HTTP API: against ``--url`` when given, otherwise
against an in-process instance of the app, so no server is needed for local
use.  Exit codes: 0 success, 1 usage error, 2 resource/I-O limit,
3 verification failure (a counterexample is serialized to stdout).
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click
import httpx

from . import __version__, reports
from .errors import ResourceLimitError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RESOURCE = 2
EXIT_VERIFICATION = 3


class ClientError(Exception):
    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


class VerificationFailure(Exception):
    def __init__(self, suite: str, counterexample: dict):
        super().__init__(f"suite {suite} found a counterexample")
        self.suite = suite
        self.counterexample = counterexample


class CliContext:
    """Resolved configuration plus a lazily created service client."""

    def __init__(self, url: str | None, config_path: str | None):
        self.cfg: dict = {}
        if config_path:
            try:
                self.cfg = json.loads(Path(config_path).read_text())
            except (OSError, json.JSONDecodeError) as exc:
                raise click.UsageError(f"cannot read config {config_path}: {exc}")
            if not isinstance(self.cfg, dict):
                raise click.UsageError("config file must hold a JSON object")
        self._url = url
        self._client = None

    def setting(self, name: str, flag_value, default=None):
        """Flags win over config-file values, which win over defaults."""
        if flag_value is not None:
            return flag_value
        if name in self.cfg:
            return self.cfg[name]
        return default

    @property
    def client(self):
        if self._client is None:
            if self._url:
                self._client = httpx.Client(base_url=self._url, timeout=None)
            else:
                import warnings

                with warnings.catch_warnings():
                    warnings.simplefilter("ignore")
                    from fastapi.testclient import TestClient

                from .service.app import app

                self._client = TestClient(app)
        return self._client

    def post(self, path: str, payload: dict) -> dict:
        response = self.client.post(path, json=payload)
        if response.status_code >= 400:
            kind = "usage"
            message = response.text
            try:
                detail = response.json().get("detail")
                if isinstance(detail, dict):
                    kind = detail.get("kind", "usage")
                    message = detail.get("message", message)
                elif detail is not None:
                    message = json.dumps(detail)
            except (ValueError, AttributeError):
                pass
            code = EXIT_RESOURCE if kind == "resource" else EXIT_USAGE
            raise ClientError(message, code)
        return response.json()


def _word_payload(ctx: CliContext, word: str | None, family: str | None, length: int | None) -> dict:
    family = ctx.setting("family", family)
    length = ctx.setting("length", length)
    if word is not None and family is not None:
        raise click.UsageError("give either a literal WORD or --family, not both")
    if word is not None:
        return {"word": word}
    if family is None:
        raise click.UsageError("need a literal WORD or --family DESCRIPTOR")
    if length is None:
        raise click.UsageError("--family needs --length")
    return {"family": family, "length": int(length)}


def _write_or_print(text: str, output: str | None) -> None:
    if output is None or output == "-":
        click.echo(text, nl=False)
    else:
        Path(output).write_text(text)


@click.group()
@click.version_option(version=__version__, prog_name="palinkit")
@click.option("--url", default=None, help="Remote service URL; default is in-process.")
@click.option("--config", "config_path", default=None, type=click.Path(), help="JSON config file; flags win on conflict.")
@click.pass_context
def cli(ctx: click.Context, url: str | None, config_path: str | None) -> None:
    """Palindromic-length toolkit client."""
    ctx.obj = CliContext(url, config_path)


@cli.command("pl")
@click.argument("word", required=False, default=None)
@click.option("--family", default=None, help="Family descriptor, e.g. periodic:01")
@click.option("--length", type=int, default=None)
@click.option("--factorize", is_flag=True, help="Print one minimal factorization.")
@click.option("--all-mpf", is_flag=True, help="Print every minimal factorization.")
@click.option("--limit", type=int, default=None, help="Cap on enumerated factorizations.")
@click.pass_obj
def cmd_pl(ctx: CliContext, word, family, length, factorize, all_mpf, limit) -> None:
    """Palindromic length of a word (and optionally its factorizations)."""
    payload = _word_payload(ctx, word, family, length)
    payload.update({"factorize": factorize, "all_mpf": all_mpf, "limit": limit})
    data = ctx.post("/pl", payload)
    click.echo(str(data["pl"]))
    if data.get("factorizations") is not None:
        for parts in data["factorizations"]:
            click.echo("".join(f"({p})" for p in parts))


@cli.command("profile")
@click.argument("word", required=False, default=None)
@click.option("--family", default=None)
@click.option("--length", type=int, default=None)
@click.option("--format", "fmt", type=click.Choice(reports.FORMATS), default=None)
@click.option("--output", default=None, help="Report path; defaults to stdout.")
@click.pass_obj
def cmd_profile(ctx: CliContext, word, family, length, fmt, output) -> None:
    """Per-prefix palindromic lengths with the running maximum."""
    payload = _word_payload(ctx, word, family, length)
    fmt = ctx.setting("format", fmt, reports.CSV)
    output = ctx.setting("output", output)
    data = ctx.post("/profile", payload)
    pl = data["pl"]
    running = data["running_max"]
    if fmt == reports.CSV:
        body = ["i,pl,running_max"]
        body += [f"{i},{pl[i]},{running[i]}" for i in range(len(pl))]
    else:
        body = [
            json.dumps({"i": i, "pl": pl[i], "running_max": running[i]}, separators=(",", ":"))
            for i in range(len(pl))
        ]
    config = {"command": "profile", **payload, "format": fmt}
    _write_or_print(reports.assemble(body, config, fmt), output)


@cli.command("generate")
@click.option("--family", required=True)
@click.option("--length", type=int, required=True)
@click.pass_obj
def cmd_generate(ctx: CliContext, family, length) -> None:
    """Materialize a prefix of a word family."""
    data = ctx.post("/generate", {"family": family, "length": length})
    click.echo(data["word"])


@cli.command("scan-omega")
@click.argument("word", required=False, default=None)
@click.option("--family", default=None)
@click.option("--length", type=int, default=None)
@click.option("-k", "--k", type=int, default=None, help="Palindromic length bound.")
@click.option("--strict", is_flag=True, help="Strict threshold comparison.")
@click.option("--format", "fmt", type=click.Choice(reports.FORMATS), default=None)
@click.option("--output", required=True, help="Report path ('-' for stdout).")
@click.option("--max-scan-length", type=int, default=None)
@click.pass_obj
def cmd_scan_omega(ctx: CliContext, word, family, length, k, strict, fmt, output, max_scan_length) -> None:
    """Scan factors for palindromic-prefix density membership."""
    payload = _word_payload(ctx, word, family, length)
    k = ctx.setting("k", k)
    if k is None:
        raise click.UsageError("scan-omega needs -k")
    fmt = ctx.setting("format", fmt, reports.JSONL)
    cap = ctx.setting("max_scan_length", max_scan_length, 10_000)
    payload.update({"k": int(k), "strict": strict, "max_scan_length": int(cap)})
    data = ctx.post("/omega/scan", payload)
    members = data["members"]
    if fmt == reports.CSV:
        from .omega import CSV_COLUMNS

        body = [CSV_COLUMNS]
        body += [
            ",".join(str(m[col]) for col in CSV_COLUMNS.split(","))
            for m in members
        ]
    else:
        body = [json.dumps(m, separators=(",", ":")) for m in members]
    config = {"command": "scan-omega", **payload, "format": fmt}
    extra = None
    if data.get("k_covers_factor_pl") is False:
        extra = {"caveat": "k_below_max_factor_pl"}
    _write_or_print(reports.assemble(body, config, fmt, extra=extra), output)
    click.echo(
        f"members={data['member_count']} max_count_with_eps={data['max_count_with_eps']}",
        err=(output in (None, "-")),
    )


@cli.command("hunt")
@click.argument("word", required=False, default=None)
@click.option("--family", default=None)
@click.option("--length", type=int, default=None)
@click.option("-k", "--k", type=int, default=None)
@click.option("-j", "--j", type=int, default=None, help="Target exponent.")
@click.option("--max-scan-length", type=int, default=None)
@click.pass_obj
def cmd_hunt(ctx: CliContext, word, family, length, k, j, max_scan_length) -> None:
    """Find a periodic palindromic prefix (ab)^e with e >= j in some factor."""
    payload = _word_payload(ctx, word, family, length)
    k = ctx.setting("k", k)
    j = ctx.setting("j", j)
    if k is None or j is None:
        raise click.UsageError("hunt needs -k and -j")
    cap = ctx.setting("max_scan_length", max_scan_length, 10_000)
    payload.update({"k": int(k), "j": int(j), "max_scan_length": int(cap)})
    data = ctx.post("/omega/hunt", payload)
    if not data["found"]:
        click.echo("not found")
        return
    click.echo(
        f"a={data['a']!r} b={data['b']!r} exponent={data['exponent']} "
        f"period={data['period']} host=[{data['host_start']},{data['host_end']}]"
    )


@cli.command("verify")
@click.argument("suite")
@click.option("--max-len", type=int, default=None)
@click.option("--alpha", "alphabet_size", type=int, default=None, help="Alphabet size for quadruple suites.")
@click.option("--max-d", type=int, default=None)
@click.option("--max-v", type=int, default=None)
@click.option("--n-slack", type=int, default=None)
@click.option("--random-words", type=int, default=None)
@click.option("--random-len", type=int, default=None)
@click.option("--seed", type=int, default=None)
@click.option("--output", default=None, help="Write per-case records as JSON lines.")
@click.pass_obj
def cmd_verify(ctx: CliContext, suite, max_len, alphabet_size, max_d, max_v, n_slack, random_words, random_len, seed, output) -> None:
    """Run a named exhaustive suite; exits 3 with a counterexample on failure."""
    from .verify import SUITES

    if suite not in SUITES:
        raise click.UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    payload = {
        "suite": suite,
        "max_len": ctx.setting("max_len", max_len),
        "alphabet_size": ctx.setting("alphabet_size", alphabet_size, 2),
        "max_d": ctx.setting("max_d", max_d, 4),
        "max_v": ctx.setting("max_v", max_v, 3),
        "n_slack": ctx.setting("n_slack", n_slack, 2),
        "random_words": ctx.setting("random_words", random_words, 0),
        "random_len": ctx.setting("random_len", random_len, 0),
        "seed": ctx.setting("seed", seed, 0),
    }
    data = ctx.post("/verify", payload)
    if output is not None:
        body = [json.dumps(r, separators=(",", ":")) for r in data["records"]]
        config = {"command": "verify", **payload}
        _write_or_print(reports.assemble(body, config, reports.JSONL), output)
    status = "PASS" if data["passed"] else "FAIL"
    click.echo(f"suite={data['suite']} cases={data['cases']} failures={len(data['failures'])} {status}")
    if not data["passed"]:
        raise VerificationFailure(suite, data["failures"][0])


@cli.command("serve")
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def cmd_serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=host, port=port)


def main(argv: list[str] | None = None) -> int:
    """Entry point returning the process exit code."""
    try:
        cli.main(args=argv, prog_name="palinkit", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return int(exc.exit_code)
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return EXIT_USAGE
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except click.Abort:
        return EXIT_USAGE
    except ClientError as exc:
        click.echo(f"error: {exc}", err=True)
        return exc.exit_code
    except ResourceLimitError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_RESOURCE
    except VerificationFailure as exc:
        click.echo(json.dumps(exc.counterexample, sort_keys=True))
        click.echo(f"error: {exc}", err=True)
        return EXIT_VERIFICATION
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_RESOURCE
    return EXIT_OK


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
