# Subcommand handlers: load documents, run use cases, render output, map exit codes
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Optional, TextIO

from pydantic import BaseModel

from app.api.schemas.results import (
    Case51Response,
    ClassificationResponse,
    CoefficientsResponse,
    ConstraintReportResponse,
    PoleResponse,
    ReducedFormResponse,
    RoundtripResponse,
    TrajectoryPointResponse,
    TrajectoryResponse,
    VerifyResponse,
)
from app.api.schemas.system import to_pair
from app.application.use_cases.case51_system import Case51SystemInput
from app.application.use_cases.check_constraints import CheckConstraintsInput
from app.application.use_cases.classify_system import ClassifySystemInput
from app.application.use_cases.forward_system import ForwardSystemInput
from app.application.use_cases.reduce_system import ReduceSystemInput
from app.application.use_cases.roundtrip_system import RoundtripSystemInput
from app.application.use_cases.sample_trajectory import SampleTrajectoryInput
from app.application.use_cases.solve_system import SolveSystemInput
from app.application.use_cases.verify_system import VerifySystemInput
from app.core import dependencies
from app.core.config import AppConfig
from app.core.logger import get_logger
from app.domain.entities.system_document import SystemDocument
from app.domain.exceptions import InvalidInput
from app.domain.value_objects.tolerance import Tolerance
from app.domain.value_objects.trajectory import InitialState
from app.infrastructure.export import json_document_writer
from app.infrastructure.export.csv_trajectory_writer import write_csv

logger = get_logger("api.cli")

EXIT_OK = 0

# 오류 코드 -> 종료 코드
EXIT_CODES: Dict[str, int] = {
    "MALFORMED_INPUT": 1,
    "INVALID_LAMBDA": 1,
    "INTERNAL_ERROR": 1,
    "CONSTRAINT_VIOLATED": 2,
    "Z_MISMATCH": 2,
    "NON_GENERIC": 3,
    "DEGENERATE_Z": 3,
    "DETERMINANT_ZERO": 3,
    "POLE_AT_TIME": 4,
    "BLOWUP_DETECTED": 4,
    "STEP_LIMIT_EXCEEDED": 4,
    "VERIFICATION_FAILED": 5,
    "ROUNDTRIP_MISMATCH": 5,
}


def exit_code(error: Optional[str]) -> int:
    if error is None:
        return EXIT_OK
    return EXIT_CODES.get(error, 1)


def parse_x0(text: Optional[str]) -> Optional[InitialState]:
    """"re,im,re,im" -> InitialState"""
    if text is None:
        return None
    try:
        values = [float(v) for v in text.split(",")]
        if len(values) != 4:
            raise ValueError
        return InitialState(complex(values[0], values[1]), complex(values[2], values[3]))
    except ValueError as e:
        raise InvalidInput(f"--x0 는 re,im,re,im 형식의 유한한 실수 4개여야 합니다: {text}") from e


def emit(model, out: TextIO) -> None:
    """구조화 출력 (JSON, 실수는 17 유효숫자, 같은 입력이면 같은 바이트열)"""
    if isinstance(model, BaseModel):
        payload = model.model_dump()
    else:
        payload = [m.model_dump() for m in model]
    out.write(json_document_writer.dumps(payload) + "\n")


class CommandContext:
    """한 번의 CLI 실행에 필요한 설정과 허용오차"""

    def __init__(self, config: AppConfig, tol: Tolerance, out: TextIO):
        self.config = config
        self.tol = tol
        self.out = out
        self.repository = dependencies.get_system_repository(tol)

    def load(self, path: str) -> SystemDocument:
        return self.repository.load(path)

    def fail(self, error: Optional[str], message: Optional[str]) -> int:
        logger.error(f"{error}: {message}")
        return exit_code(error)


def run_check(args, ctx: CommandContext) -> int:
    use_case = dependencies.get_check_constraints_use_case(ctx.config, ctx.tol)
    result = use_case.execute(CheckConstraintsInput(document=ctx.load(args.file)))
    if result.report is None:
        return ctx.fail(result.error, result.message)
    emit(ConstraintReportResponse.from_domain(result.report), ctx.out)
    return exit_code(result.error)


def run_reduce(args, ctx: CommandContext) -> int:
    use_case = dependencies.get_reduce_system_use_case(ctx.config, ctx.tol)
    result = use_case.execute(ReduceSystemInput(document=ctx.load(args.file)))
    if not result.success:
        return ctx.fail(result.error, result.message)
    emit(ReducedFormResponse.from_domain(result.reduced, result.residuals), ctx.out)
    return EXIT_OK


def run_solve(args, ctx: CommandContext) -> int:
    use_case = dependencies.get_solve_system_use_case(ctx.config, ctx.tol)
    result = use_case.execute(SolveSystemInput(document=ctx.load(args.file), t=args.t, x0=parse_x0(args.x0)))
    if not result.success:
        return ctx.fail(result.error, result.message)
    emit(TrajectoryPointResponse.from_domain(result.point), ctx.out)
    return EXIT_OK


def run_sample(args, ctx: CommandContext) -> int:
    use_case = dependencies.get_sample_trajectory_use_case(ctx.config, ctx.tol)
    result = use_case.execute(SampleTrajectoryInput(
        document=ctx.load(args.file), t0=args.t0, t1=args.t1, steps=args.steps, x0=parse_x0(args.x0),
    ))
    if not result.success:
        return ctx.fail(result.error, result.message)
    trajectory = result.trajectory
    if args.format == "csv":
        write_csv(trajectory.points, ctx.out)
    else:
        emit(TrajectoryResponse(
            points=[TrajectoryPointResponse.from_domain(p) for p in trajectory.points],
            poles=[PoleResponse.from_domain(p) for p in trajectory.poles],
        ), ctx.out)
    return EXIT_OK


def run_classify(args, ctx: CommandContext) -> int:
    use_case = dependencies.get_classify_system_use_case(ctx.config, ctx.tol)
    max_denominator = args.max_denominator or ctx.config.MAX_DENOMINATOR
    result = use_case.execute(ClassifySystemInput(document=ctx.load(args.file), max_denominator=max_denominator))
    if not result.success:
        return ctx.fail(result.error, result.message)
    emit(ClassificationResponse.from_domain(result.report), ctx.out)
    return EXIT_OK


def run_forward(args, ctx: CommandContext) -> int:
    use_case = dependencies.get_forward_system_use_case(ctx.config, ctx.tol)
    result = use_case.execute(ForwardSystemInput(document=ctx.load(args.file)))
    if not result.success:
        return ctx.fail(result.error, result.message)
    emit(CoefficientsResponse.from_domain(result.coefficients), ctx.out)
    return EXIT_OK


def run_case51(args, ctx: CommandContext) -> int:
    use_case = dependencies.get_case51_system_use_case(ctx.config, ctx.tol)
    result = use_case.execute(Case51SystemInput(document=ctx.load(args.file), t=args.t, x0=parse_x0(args.x0)))
    if result.match is not None:
        emit(Case51Response.from_domain(result.match, result.reduced, result.point), ctx.out)
    if not result.success:
        return ctx.fail(result.error, result.message)
    return EXIT_OK


def _fan_out(files: List[str], ctx: CommandContext, evaluate: Callable[[str], BaseModel]) -> List[BaseModel]:
    """파일별 평가를 동시에 실행 (출력은 입력 순서)"""
    with ThreadPoolExecutor(max_workers=max(1, ctx.config.MAX_WORKERS)) as pool:
        return list(pool.map(evaluate, files))


def run_roundtrip(args, ctx: CommandContext) -> int:
    use_case = dependencies.get_roundtrip_system_use_case(ctx.config, ctx.tol)

    def evaluate(path: str) -> RoundtripResponse:
        try:
            document = ctx.load(path)
        except InvalidInput as e:
            return RoundtripResponse(file=path, success=False, error=e.error_code, message=str(e))
        result = use_case.execute(RoundtripSystemInput(document=document))
        return RoundtripResponse(
            file=path,
            success=result.success,
            z_recovered=[to_pair(z) for z in result.z_recovered] if result.z_recovered else None,
            z_expected=[to_pair(z) for z in result.z_expected] if result.z_expected else None,
            z_error=result.z_error,
            coefficient_error=result.coefficient_error,
            error=result.error,
            message=result.message,
        )

    responses = _fan_out(args.files, ctx, evaluate)
    emit(responses, ctx.out)
    return _worst(responses)


def run_verify(args, ctx: CommandContext) -> int:
    use_case = dependencies.get_verify_system_use_case(ctx.config, ctx.tol)
    x0 = parse_x0(args.x0)
    steps = args.steps or ctx.config.VERIFY_STEPS
    threshold = args.threshold or ctx.config.VERIFY_THRESHOLD

    def evaluate(path: str) -> VerifyResponse:
        try:
            document = ctx.load(path)
        except InvalidInput as e:
            return VerifyResponse(file=path, success=False, error=e.error_code, message=str(e))
        result = use_case.execute(VerifySystemInput(
            document=document, t1=args.t1, steps=steps, threshold=threshold, x0=x0,
        ))
        return VerifyResponse(
            file=path,
            success=result.success,
            sup_error=result.sup_error,
            threshold=result.threshold,
            compared_points=result.compared_points,
            poles=[PoleResponse.from_domain(p) for p in result.poles],
            error=result.error,
            message=result.message,
        )

    responses = _fan_out(args.files, ctx, evaluate)
    emit(responses, ctx.out)
    return _worst(responses)


def _worst(responses) -> int:
    codes = [exit_code(r.error) for r in responses]
    for r in responses:
        if r.error:
            logger.error(f"{r.file}: {r.error} {r.message or ''}".rstrip())
    return max(codes, default=EXIT_OK)


COMMANDS = {
    "check": run_check,
    "reduce": run_reduce,
    "solve": run_solve,
    "sample": run_sample,
    "classify": run_classify,
    "forward": run_forward,
    "roundtrip": run_roundtrip,
    "verify": run_verify,
    "case51": run_case51,
}
