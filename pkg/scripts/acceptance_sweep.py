"""
코퍼스 기반 acceptance sweep

생성된 패치/체(sieve) 코퍼스 전체에 대해 다음을 검사합니다:
  1. is_cover 와 brute-force naive_cover 의 일치
  2. K_S 의 Grothendieck 공리 (maximal, pullback stability, transitivity)
  5. point_certificate 분류와 인증서 검증
  6. finite_subcover 의 cover / irredundant 성질
  9. is_trivializing_zariski 와 oracle 판정의 일치

사용법:
  python scripts/acceptance_sweep.py
  python scripts/acceptance_sweep.py --seed 7 --patches 50 --sieves 100
"""

import argparse
import logging
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List

# 프로젝트 루트를 Python 경로에 추가
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from config.logging_config import setup_logging  # noqa: E402
from config.settings import settings  # noqa: E402
from src.bigcell import (  # noqa: E402
    finite_subcover,
    is_cover,
    is_trivializing_zariski,
    maximal_sieve,
    point_certificate,
    pullback,
    verify_certificate,
)
from src.bigcell.sieve import Sieve  # noqa: E402
from src.core.errors import BigCellError  # noqa: E402
from src.oracle import (  # noqa: E402
    BoundedUniverse,
    Corpus,
    enumerate_universe,
    generate_corpus,
    naive_cover,
    naive_members,
    random_sieve,
    universe_from_settings,
)

logger = logging.getLogger(__name__)


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failures: List[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures


# =============================================================================
# CHECKS
# =============================================================================


def check_oracle_equivalence(corpus: Corpus) -> CheckResult:
    result = CheckResult("oracle equivalence")
    for sieve, S in corpus.pairs(per_sieve=2):
        expected = naive_cover(sieve.base, sieve.generators, S, corpus.universe)
        if is_cover(sieve, S) == expected:
            result.passed += 1
        else:
            result.failures.append(f"{sieve} / {S}: oracle says {expected}")
    return result


def check_grothendieck_axioms(corpus: Corpus, seed: int, triples: int = 1000) -> CheckResult:
    """maximal sieves cover, covers pull back to covers, transitivity on sampled R"""
    result = CheckResult("grothendieck axioms")
    rng = random.Random(seed)
    naturals = corpus.universe.naturals()
    for _ in range(triples):
        S = rng.choice(corpus.patches)
        L = rng.choice(corpus.sieves)
        m = L.base * rng.choice([k for k in naturals if L.base * k in naturals] or [1])
        R = random_sieve(rng, corpus.universe)
        R = Sieve(L.base, tuple(g for g in R.generators if g % L.base == 0))
        failure = None
        if not is_cover(maximal_sieve(L.base), S):
            failure = f"maximal sieve on {L.base} does not cover / {S}"
        elif is_cover(L, S) and not is_cover(pullback(L, m), S):
            failure = f"{L} covers but its pullback along {m} does not / {S}"
        elif (
            is_cover(L, S)
            and all(is_cover(pullback(R, g), S) for g in L.generators)
            and not is_cover(R, S)
        ):
            failure = f"transitivity fails for L={L}, R={R} / {S}"
        if failure:
            result.failures.append(failure)
        else:
            result.passed += 1
    return result


def check_point_certificates(corpus: Corpus) -> CheckResult:
    result = CheckResult("point certificates")
    elements = enumerate_universe(corpus.universe)
    for S in corpus.patches:
        for s in elements:
            certificate = point_certificate(s, S)
            if certificate.is_member != S.contains(s):
                result.failures.append(f"{s} / {S}: kind {certificate.kind.value}")
            elif not verify_certificate(s, S, certificate):
                result.failures.append(f"{s} / {S}: certificate {certificate} does not verify")
            else:
                result.passed += 1
    return result


def check_subcover_soundness(corpus: Corpus) -> CheckResult:
    result = CheckResult("subcover soundness")
    for sieve, S in corpus.pairs(per_sieve=2):
        if len(sieve.generators) > 64 or not is_cover(sieve, S):
            continue
        kept = finite_subcover(sieve, S)
        if not is_cover(sieve.with_generators(kept), S):
            result.failures.append(f"{sieve} / {S}: subcover {kept} does not cover")
            continue
        redundant = [
            g for i, g in enumerate(kept) if is_cover(sieve.with_generators(kept[:i] + kept[i + 1:]), S)
        ]
        if redundant:
            result.failures.append(f"{sieve} / {S}: {redundant} are redundant in {kept}")
        else:
            result.passed += 1
    return result


def check_trivializing(corpus: Corpus) -> CheckResult:
    """Oracle over the widened corpus universe (members may hide finite exponents outside the list)"""
    result = CheckResult("trivializing criterion")
    widened = BoundedUniverse(corpus.universe.primes, corpus.universe.max_exp, widened=True)
    for S in corpus.patches:
        expected = all(s.is_completely_infinite() for s in naive_members(S, widened))
        if is_trivializing_zariski(S) == expected:
            result.passed += 1
        else:
            result.failures.append(f"{S}: oracle says {expected}")
    return result


# =============================================================================
# RUNNER
# =============================================================================


def _timed(name: str, check: Callable[[], CheckResult]) -> CheckResult:
    started = time.perf_counter()
    try:
        result = check()
    except BigCellError as exc:
        logger.error(f"check aborted: {exc}")
        result = CheckResult(name, failures=[f"aborted: {exc}"])
    result.seconds = time.perf_counter() - started
    return result


def run_sweep(corpus: Corpus, seed: int, workers: int) -> List[CheckResult]:
    checks: Dict[str, Callable[[], CheckResult]] = {
        "1": lambda: check_oracle_equivalence(corpus),
        "2": lambda: check_grothendieck_axioms(corpus, seed),
        "5": lambda: check_point_certificates(corpus),
        "6": lambda: check_subcover_soundness(corpus),
        "9": lambda: check_trivializing(corpus),
    }
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = {key: executor.submit(_timed, f"criterion {key}", check) for key, check in checks.items()}
        return [futures[key].result() for key in checks]


def main() -> int:
    parser = argparse.ArgumentParser(
        description="코퍼스 기반 acceptance sweep",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
예시:
  python scripts/acceptance_sweep.py                      # 기본 코퍼스 (settings)
  python scripts/acceptance_sweep.py --universe 2,3:3     # 다른 유한 우주
  python scripts/acceptance_sweep.py --widened           # SpecZ, default=inf 포함
        """,
    )
    parser.add_argument("--seed", type=int, default=settings.CORPUS_SEED, help="코퍼스 시드")
    parser.add_argument("--patches", type=int, default=settings.CORPUS_PATCHES, help="패치 개수")
    parser.add_argument("--sieves", type=int, default=settings.CORPUS_SIEVES, help="체(sieve) 개수")
    parser.add_argument("--universe", help="'2,3,5:2' 형식의 유한 우주")
    parser.add_argument("--widened", action="store_true", help="대표 소수와 default=inf 원소를 우주에 추가")
    parser.add_argument("--workers", type=int, default=settings.MAX_WORKERS, help="스레드 수")
    args = parser.parse_args()

    setup_logging(settings.LOG_LEVEL, settings.LOG_DIR, solver_debug=settings.DEBUG)

    primes, max_exp = None, None
    if args.universe:
        primes_part, _, exp_part = args.universe.partition(":")
        primes = [int(p) for p in primes_part.split(",") if p.strip()]
        max_exp = int(exp_part) if exp_part.strip() else None
    universe = universe_from_settings(primes, max_exp, widened=args.widened or None)

    print("=" * 60)
    print("🚀 Acceptance sweep 시작")
    print("=" * 60)

    corpus = generate_corpus(args.seed, args.patches, args.sieves, universe)
    print(f"📊 우주 {corpus.universe}: 패치 {len(corpus.patches)}개, 체 {len(corpus.sieves)}개")

    results = run_sweep(corpus, args.seed, max(1, args.workers))

    print("\n" + "=" * 60)
    for result in results:
        marker = "✅" if result.ok else "❌"
        print(f"{marker} {result.name}: {result.passed} 통과, {len(result.failures)} 실패 ({result.seconds:.1f}s)")
        for failure in result.failures[:5]:
            print(f"   - {failure}")
    print("=" * 60)

    if all(result.ok for result in results):
        print("✅ 모든 검사 통과!")
        return 0
    print("❌ 실패한 검사가 있습니다.")
    return 1


if __name__ == "__main__":
    sys.exit(main())
