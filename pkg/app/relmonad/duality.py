from functools import singledispatch

from app.fincat.ops import opposite_functor
from app.fincat.types import LawReport
from app.relmonad.laws import check_relative_monad
from app.relmonad.types import RelativeComonad, RelativeMonad


@singledispatch
def dualize(x):
    raise TypeError(f"cannot dualize {type(x).__name__}")


@dualize.register
def _(T: RelativeMonad) -> RelativeComonad:
    # f : j x -> t y in E is f : t y -> j x in E^op, so keys swap x and y
    return RelativeComonad(
        j=opposite_functor(T.j),
        t_ob=T.t_ob,
        eps=T.eta,
        dagger={(y, x, f): g for (x, y, f), g in T.dagger.items()},
    )


@dualize.register
def _(D: RelativeComonad) -> RelativeMonad:
    return RelativeMonad(
        j=opposite_functor(D.j),
        t_ob=D.t_ob,
        eta=D.eps,
        dagger={(y, x, f): g for (x, y, f), g in D.dagger.items()},
    )


def check_relative_comonad(D: RelativeComonad) -> LawReport:
    report = check_relative_monad(dualize(D))
    return LawReport(
        subject="relative comonad",
        violations=report.violations,
        supplementary=report.supplementary,
    )
