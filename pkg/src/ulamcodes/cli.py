"""
Command-line front end.

Subcommands: gen-ground-set, build, encode, decode, distance, corrupt,
audit, sweep. Instances are described by --q/--ell plus a ground-set
descriptor and a block-code descriptor, or by a flat key=value config
file (flags override the file).

Ground-set descriptors:
    xor:gv:<d>        XOR construction from a greedy-GV binary code of
                      length log2(q) and min distance d
    xor:all           XOR construction from all binary words
    bruteforce:<max_lcs>[:<target_p>]
    file:<path>       ground-set file ("q p max_lcs" header)

Block-code descriptors:
    rs:<field>,<n>,<k>      Reed-Solomon
    gv:<alphabet>,<n>,<d>   greedy Gilbert-Varshamov search
    rep:<alphabet>,<n>      repetition
    id:<alphabet>,<n>       identity (rate 1, distance 1)
    concat:<outer>/<inner>  concatenation of two descriptors
    file:<path>             explicit-code file ("alphabet length size" header)

Exit status: 0 on success, 1 on domain failures (decoding failure,
invalid parameters), 2 on usage errors. Failure paths print one
"error: ..." line to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import block_codes, channel, ground_set, perm_core, ulam_code, verify
from .block_codes import BlockCode, DecodeFailure
from .errors import ParameterError
from .ground_set import GroundSet


@dataclass
class InstanceConfig:
    q: int | None = None
    ell: int | None = None
    ground: str | None = None
    code: str | None = None
    seed: int | None = None

    def resolve(self) -> ulam_code.UlamCodeParams:
        if self.q is None or self.ell is None:
            raise ParameterError("instance needs q and ell (flags or config file)")
        if self.ground is None:
            raise ParameterError("instance needs a ground-set descriptor")
        ground = resolve_ground_set(self.ground, self.q)
        if self.code is None:
            raise ParameterError("instance needs a block-code descriptor")
        code = resolve_block_code(self.code, ground.p, self.q ** (self.ell - 1))
        return ulam_code.UlamCodeParams(q=self.q, ell=self.ell, ground=ground, code=code)

    def resolve_ground(self) -> GroundSet:
        if self.q is None:
            raise ParameterError("ground-set construction needs q")
        if self.ground is None:
            raise ParameterError("instance needs a ground-set descriptor")
        return resolve_ground_set(self.ground, self.q)


def load_config_file(path: str) -> InstanceConfig:
    cfg = InstanceConfig()
    with open(path, encoding="ascii") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ParameterError(f"config line is not key=value: {raw.strip()!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            if key == "q":
                cfg.q = int(value)
            elif key == "ell":
                cfg.ell = int(value)
            elif key == "ground_set":
                cfg.ground = value
            elif key == "code":
                cfg.code = value
            elif key == "seed":
                cfg.seed = int(value)
            else:
                raise ParameterError(f"unknown config key {key!r}")
    return cfg


def resolve_ground_set(desc: str, q: int) -> GroundSet:
    kind, _, rest = desc.partition(":")
    if kind == "file":
        loaded = ground_set.load_ground_set(rest)
        if loaded.q != q:
            raise ParameterError(f"ground-set file is over [{loaded.q}], expected [{q}]")
        return loaded
    if kind == "xor":
        r = q.bit_length() - 1
        if q != 1 << r:
            raise ParameterError(f"xor ground set needs q a power of two, got {q}")
        if rest == "all":
            g = block_codes.identity_code(2, r)
        elif rest.startswith("gv:"):
            g = block_codes.greedy_gv_code(2, r, int(rest[3:]))
        else:
            raise ParameterError(f"unknown xor sub-descriptor {rest!r}")
        return ground_set.xor_ground_set(q, g)
    if kind == "bruteforce":
        parts = rest.split(":")
        max_lcs = int(parts[0])
        target_p = int(parts[1]) if len(parts) > 1 else None
        return ground_set.brute_force_ground_set(q, target_p, max_lcs)
    raise ParameterError(f"unknown ground-set descriptor {desc!r}")


def resolve_block_code(desc: str, alphabet: int, length: int) -> BlockCode:
    """Resolve a descriptor; alphabet/length are the instance's required values."""
    code = _parse_code(desc)
    if code.alphabet_size != alphabet:
        raise ParameterError(
            f"block code alphabet {code.alphabet_size} != ground-set size {alphabet}"
        )
    if code.block_length != length:
        raise ParameterError(f"block code length {code.block_length} != n/q = {length}")
    return code


def _parse_code(desc: str) -> BlockCode:
    kind, _, rest = desc.partition(":")
    if kind == "file":
        return block_codes.load_explicit_code(rest)
    if kind == "rs":
        field_order, n, k = (int(tok) for tok in rest.split(","))
        return block_codes.rs_code(field_order, n, k)
    if kind == "gv":
        alphabet, n, d = (int(tok) for tok in rest.split(","))
        return block_codes.greedy_gv_code(alphabet, n, d)
    if kind == "rep":
        alphabet, n = (int(tok) for tok in rest.split(","))
        return block_codes.repetition_code(alphabet, n)
    if kind == "id":
        alphabet, n = (int(tok) for tok in rest.split(","))
        return block_codes.identity_code(alphabet, n)
    if kind == "concat":
        outer_desc, sep, inner_desc = rest.partition("/")
        if not sep:
            raise ParameterError("concat descriptor needs outer/inner")
        return block_codes.concat_code(_parse_code(outer_desc), _parse_code(inner_desc))
    raise ParameterError(f"unknown block-code descriptor {desc!r}")


def parse_shufflers(text: str) -> tuple[tuple[int, ...], ...]:
    """Stages separated by ';' or '/', symbols by spaces or commas."""
    stages = [s for s in text.replace("/", ";").split(";") if s.strip()]
    return tuple(
        tuple(int(tok) for tok in stage.replace(",", " ").split()) for stage in stages
    )


def _instance_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="key=value instance config file")
    parser.add_argument("--q", type=int, help="group alphabet size")
    parser.add_argument("--ell", type=int, help="number of stages")
    parser.add_argument("--ground-set", dest="ground", help="ground-set descriptor")
    parser.add_argument("--code", help="block-code descriptor")


def _config_from_args(args) -> InstanceConfig:
    cfg = load_config_file(args.config) if args.config else InstanceConfig()
    if args.q is not None:
        cfg.q = args.q
    if args.ell is not None:
        cfg.ell = args.ell
    if args.ground is not None:
        cfg.ground = args.ground
    if args.code is not None:
        cfg.code = args.code
    return cfg


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ulamcodes",
        description="Permutation codes in the Ulam metric: build, encode, decode, audit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-ground-set", help="construct and save a ground set")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--ground-set", dest="ground", required=True, help="descriptor to build")
    p.add_argument("--out", required=True, help="output ground-set file")

    p = sub.add_parser("build", help="validate an instance and print derived parameters")
    _instance_flags(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("encode", help="encode a message (or raw shufflers) to a permutation")
    _instance_flags(p)
    p.add_argument("--msg", help="decimal message, any size")
    p.add_argument(
        "--raw-shufflers",
        help="explicit shuffler tuple, stages ';'-separated, e.g. '1 0 0 1; 1 1 1 0; 0 0 0 1'",
    )
    p.add_argument("--out", help="also write the permutation to this file")

    p = sub.add_parser("decode", help="decode a received permutation")
    _instance_flags(p)
    p.add_argument("--perm", required=True, help="permutation file (first line is used)")
    p.add_argument("--print-codeword", action="store_true")

    p = sub.add_parser("distance", help="Ulam distance between two permutation files")
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("corrupt", help="apply t random relocations")
    p.add_argument("--perm", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trace-out", help="write the relocation trace here")

    p = sub.add_parser("audit", help="pairwise distance and injectivity audit")
    _instance_flags(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--exhaustive", action="store_true", default=True)
    group.add_argument("--sample", type=int, help="number of sampled pairs")
    p.add_argument("--seed", type=int, help="required with --sample")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("sweep", help="decoder success-rate sweep under relocation noise")
    _instance_flags(p)
    p.add_argument("--t-list", required=True, help="comma-separated relocation counts")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--json", action="store_true")

    return parser


def _cmd_gen_ground_set(args) -> int:
    ground = resolve_ground_set(args.ground, args.q)
    ground_set.save_ground_set(args.out, ground)
    print(f"q={ground.q} p={ground.p} certified_max_lcs={ground.certified_max_lcs}")
    print(f"written to {args.out}")
    return 0


def _cmd_build(args) -> int:
    params = _config_from_args(args).resolve()
    bounds = ulam_code.code_bounds(params)
    rates = verify.rate_report(params)
    if args.json:
        payload = {
            "q": params.q,
            "ell": params.ell,
            "n": params.n,
            "p": params.p,
            "code_size": params.code.size,
            "code_min_distance": params.code.min_distance,
            "code_decoding_radius": params.code.decoding_radius,
            "ground_max_lcs": params.ground.certified_max_lcs,
            "message_count": str(params.message_count),
            "distance_bound": params.distance_bound,
            "decode_guarantee": str(params.decode_guarantee),
            "lcs_upper": str(bounds.lcs_upper),
            "dist_lower": str(bounds.dist_lower),
            "rate_lower": bounds.rate_lower,
            "rate": rates.rate,
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
        return 0
    print(f"q={params.q} ell={params.ell} n={params.n} p={params.p}")
    print(f"code={params.code!r}")
    print(f"ground_max_lcs={params.ground.certified_max_lcs}")
    print(f"message_count={params.message_count}")
    print(f"distance_bound={params.distance_bound}")
    print(f"decode_guarantee={params.decode_guarantee}")
    print(f"lcs_upper={bounds.lcs_upper} dist_lower={bounds.dist_lower}")
    print(f"rate={rates.rate:.9f} rate_lower={rates.rate_lower:.9f}")
    return 0


def _cmd_encode(args) -> int:
    cfg = _config_from_args(args)
    if (args.msg is None) == (args.raw_shufflers is None):
        raise ParameterError("encode needs exactly one of --msg or --raw-shufflers")
    if args.raw_shufflers is not None:
        shufflers = parse_shufflers(args.raw_shufflers)
        ground = cfg.resolve_ground()
        word = ulam_code.run_stages(shufflers, ground.q, ground)
    else:
        params = cfg.resolve()
        word = ulam_code.encode(int(args.msg), params)
    line = perm_core.format_permutation(word)
    print(line)
    if args.out:
        perm_core.write_permutations(args.out, [word])
    return 0


def _cmd_decode(args) -> int:
    params = _config_from_args(args).resolve()
    word = perm_core.read_permutations(args.perm)[0]
    result = ulam_code.decode(word, params)
    if isinstance(result, DecodeFailure):
        print(f"error: decode failed: {result.reason}", file=sys.stderr)
        return 1
    print(result.message)
    if args.print_codeword:
        print(perm_core.format_permutation(result.codeword))
    return 0


def _cmd_distance(args) -> int:
    a = perm_core.read_permutations(args.a)[0]
    b = perm_core.read_permutations(args.b)[0]
    print(perm_core.ulam_distance(a, b))
    return 0


def _cmd_corrupt(args) -> int:
    word = perm_core.read_permutations(args.perm)[0]
    corrupted, trace = channel.relocate(word, args.t, args.seed)
    print(perm_core.format_permutation(corrupted))
    if args.trace_out:
        channel.save_trace(args.trace_out, trace)
    return 0


def _cmd_audit(args) -> int:
    params = _config_from_args(args).resolve()
    if args.sample is not None and args.seed is None:
        raise ParameterError("--sample requires --seed")
    report = verify.audit_pairwise(params, sample_pairs=args.sample, seed=args.seed)
    # timings stay out of CLI output so identical inputs print identical bytes
    print(verify.report_json(report, timings=False) if args.json else report.as_text(timings=False))
    return 0 if report.passed else 1


def _cmd_sweep(args) -> int:
    params = _config_from_args(args).resolve()
    t_values = [int(tok) for tok in args.t_list.split(",") if tok.strip()]
    report = verify.decoder_sweep(params, t_values, args.trials, args.seed)
    print(verify.report_json(report, timings=False) if args.json else report.as_text(timings=False))
    return 0 if report.radius_violations == 0 else 1


_COMMANDS = {
    "gen-ground-set": _cmd_gen_ground_set,
    "build": _cmd_build,
    "encode": _cmd_encode,
    "decode": _cmd_decode,
    "distance": _cmd_distance,
    "corrupt": _cmd_corrupt,
    "audit": _cmd_audit,
    "sweep": _cmd_sweep,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ParameterError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
