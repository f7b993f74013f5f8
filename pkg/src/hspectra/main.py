"""
hspectra メインエントリーポイント

チューリング機械の実行・クロック鎖のスペクトル・K_t探索・停止センサスを
サブコマンドとして提供するバッチ実験ドライバです。

終了コード:
    run: 0 = 停止, 1 = サイクル証明, 2 = 予算切れ
    共通: 3 = 使用法・データのエラー
"""

import logging
import sys
from pathlib import Path
from typing import Any, List, Optional

import click

from .containers import get_application
from .domain.errors import HSpectraError
from .domain.models import MachineClass, OutcomeKind, parse_symbols
from .service.experiment_service import ExperimentService
from .utils import parse_int_list

logger = logging.getLogger(__name__)

EXIT_HALTED = 0
EXIT_CYCLE = 1
EXIT_EXHAUSTED = 2
EXIT_ERROR = 3

_RUN_EXIT_CODES = {
    OutcomeKind.HALTED: EXIT_HALTED,
    OutcomeKind.CYCLE_CERTIFIED: EXIT_CYCLE,
    OutcomeKind.BUDGET_EXHAUSTED: EXIT_EXHAUSTED,
}


class MachineClassType(click.ParamType):
    """'s,k' 形式の機械クラス"""

    name = "s,k"

    def convert(self, value: Any, param, ctx) -> MachineClass:
        if isinstance(value, MachineClass):
            return value
        try:
            return MachineClass.parse(value)
        except HSpectraError as e:
            self.fail(str(e), param, ctx)


class IntListType(click.ParamType):
    """カンマ区切りの整数列"""

    name = "csv-ints"

    def convert(self, value: Any, param, ctx) -> List[int]:
        if isinstance(value, list):
            return value
        try:
            return parse_int_list(value)
        except ValueError as e:
            self.fail(str(e), param, ctx)


MACHINE_CLASS = MachineClassType()
INT_LIST = IntListType()


class LabGroup(click.Group):
    """
    終了コードを制御するコマンドグループ

    サブコマンドが返した整数を終了コードとし、使用法エラーと
    ライブラリのエラーはすべて終了コード3に揃えます。
    """

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            result = super().main(
                args=args,
                prog_name=prog_name,
                complete_var=complete_var,
                standalone_mode=False,
                **extra,
            )
        except click.ClickException as e:
            e.show()
            sys.exit(EXIT_ERROR)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_ERROR)
        except (HSpectraError, ValueError, OSError) as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_ERROR)
        sys.exit(result if isinstance(result, int) else 0)


def machine_options(command):
    """機械の指定方法（--machine または --code/--class）と入力"""
    command = click.option("--input", "input_text", default="", help="入力記号列（マス0から）")(
        command
    )
    command = click.option("--class", "machine_class", type=MACHINE_CLASS, help="機械クラス s,k")(
        command
    )
    command = click.option("--code", type=click.IntRange(min=0), help="ゲーデル番号")(command)
    command = click.option("--machine", "machine_ref", help="機械記述ファイルまたはカタログ名")(
        command
    )
    return command


def out_option(command):
    return click.option("--out", type=click.Path(dir_okay=False, path_type=Path), help="出力先")(
        command
    )


def cap_option(command):
    return click.option(
        "--cap-visited", type=click.IntRange(min=1), help="サイクル検出の訪問記録上限"
    )(command)


def _service(ctx: click.Context, cap_visited: Optional[int] = None) -> ExperimentService:
    app = get_application(ctx.obj.get("config_path"))
    overrides = {}
    if cap_visited is not None:
        overrides["machine.cap_visited"] = cap_visited
    if ctx.obj.get("debug"):
        overrides["logging.level"] = "DEBUG"
    app.initialize(overrides)
    return app.get_experiment_service()


def _resolve(service: ExperimentService, machine_ref, code, machine_class):
    if code is not None and machine_class is None:
        raise click.UsageError("--code には --class が必要です")
    return service.resolve_machine(machine_ref, code, machine_class)


@click.group(cls=LabGroup)
@click.option(
    "--config",
    "-c",
    "config_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="設定ファイルのパス（HSPECTRA_CONFIG_PATH でも指定可）",
)
@click.option("--debug", "-d", is_flag=True, help="デバッグログを有効にする")
@click.pass_context
def cli(ctx: click.Context, config_path: Optional[Path], debug: bool) -> None:
    """
    hspectra - 停止問題とスペクトルギャップの卓上実験ラボ

    チューリング機械の実行からクロック鎖のハミルトニアンを作り、
    停止性とギャップの対応や時間制限付き最短プログラムを調べます。
    """
    ctx.ensure_object(dict)
    ctx.obj["config_path"] = config_path
    ctx.obj["debug"] = debug


@cli.command("run")
@machine_options
@click.option("--budget", type=click.IntRange(min=1), default=1000, show_default=True)
@out_option
@cap_option
@click.pass_context
def run_command(ctx, machine_ref, code, machine_class, input_text, budget, out, cap_visited):
    """機械を予算付きで実行し、RunRecordをJSONで出力"""
    service = _service(ctx, cap_visited)
    machine = _resolve(service, machine_ref, code, machine_class)
    record, text = service.run_machine(machine, parse_symbols(input_text), budget, out)
    click.echo(text, nl=False)
    return _RUN_EXIT_CODES[record.outcome]


@cli.command("spectrum")
@machine_options
@click.option("--truncation", type=click.IntRange(min=1), default=64, show_default=True)
@click.option("--site", type=click.IntRange(min=0), default=0, show_default=True)
@out_option
@click.option(
    "--hamiltonian-out",
    type=click.Path(dir_okay=False, path_type=Path),
    help="ハミルトニアンのCSV出力先",
)
@cap_option
@click.pass_context
def spectrum_command(
    ctx,
    machine_ref,
    code,
    machine_class,
    input_text,
    truncation,
    site,
    out,
    hamiltonian_out,
    cap_visited,
):
    """クロック鎖のスペクトル（j,eigenvalue,ldos_weight）"""
    service = _service(ctx, cap_visited)
    machine = _resolve(service, machine_ref, code, machine_class)
    _, text = service.spectrum(
        machine, parse_symbols(input_text), truncation, site, out, hamiltonian_out
    )
    click.echo(text, nl=False)
    return 0


@cli.command("gap-sweep")
@machine_options
@click.option("--truncations", type=INT_LIST, required=True, help="例: 64,128,256,512,1024")
@out_option
@cap_option
@click.pass_context
def gap_sweep_command(
    ctx, machine_ref, code, machine_class, input_text, truncations, out, cap_visited
):
    """打ち切りスイープでギャップを分類し、1行要約を出力"""
    service = _service(ctx, cap_visited)
    machine = _resolve(service, machine_ref, code, machine_class)
    _, text = service.gap_sweep(machine, parse_symbols(input_text), truncations, out)
    click.echo(text, nl=False)
    return 0


@cli.command("gap-epsilon")
@machine_options
@click.option("--epsilon", type=float, required=True, help="ギャップのしきい値 ε (> 0)")
@click.option(
    "--budget", type=click.IntRange(min=2), default=1024, show_default=True, help="最大の打ち切り長"
)
@out_option
@cap_option
@click.pass_context
def gap_epsilon_command(
    ctx, machine_ref, code, machine_class, input_text, epsilon, budget, out, cap_visited
):
    """ギャップ < ε かを YES / NO / UNKNOWN で判定"""
    if epsilon <= 0:
        raise click.BadParameter("ε は正である必要があります", param_hint="--epsilon")
    service = _service(ctx, cap_visited)
    machine = _resolve(service, machine_ref, code, machine_class)
    _, text = service.gap_epsilon(machine, parse_symbols(input_text), epsilon, budget, out)
    click.echo(text, nl=False)
    return 0


@cli.command("kt")
@click.option("--target", default="", help="目標の記号列（空文字列も可）")
@click.option("--class", "machine_class", type=MACHINE_CLASS, required=True, help="機械クラス s,k")
@click.option("--c2", type=click.IntRange(min=0), help="予算 t(n) = c2·(n+1)² + c0 の c2")
@click.option("--c0", type=click.IntRange(min=1), help="予算 t(n) の c0")
@out_option
@cap_option
@click.pass_context
def kt_command(ctx, target, machine_class, c2, c0, out, cap_visited):
    """時間制限付き最短コード（K_t）を網羅探索"""
    service = _service(ctx, cap_visited)
    _, text = service.kt(parse_symbols(target), machine_class, c2, c0, out)
    click.echo(text, nl=False)
    return 0


@cli.command("kt-curve")
@click.option("--target", default="", help="目標の記号列")
@click.option("--class", "machine_class", type=MACHINE_CLASS, required=True, help="機械クラス s,k")
@click.option("--budgets", type=INT_LIST, help="昇順の予算列（省略時は t, 4t, 16t）")
@out_option
@cap_option
@click.pass_context
def kt_curve_command(ctx, target, machine_class, budgets, out, cap_visited):
    """予算ごとの K_t 系列（budget,found,code_bits,halt_steps）"""
    service = _service(ctx, cap_visited)
    symbols = parse_symbols(target)
    if budgets is None:
        base = service.budget_rule(None, None).budget(len(symbols))
        budgets = [base, 4 * base, 16 * base]
    _, text = service.kt_curve(symbols, machine_class, budgets, out)
    click.echo(text, nl=False)
    return 0


@cli.command("census")
@click.option("--class", "machine_class", type=MACHINE_CLASS, required=True, help="機械クラス s,k")
@click.option("--budget", type=click.IntRange(min=1), default=100, show_default=True)
@out_option
@cap_option
@click.pass_context
def census_command(ctx, machine_class, budget, out, cap_visited):
    """クラス全体の停止センサス（code,outcome,steps）"""
    service = _service(ctx, cap_visited)
    _, text = service.census(machine_class, budget, out)
    click.echo(text, nl=False)
    return 0


@cli.command("enumerate")
@click.option("--class", "machine_class", type=MACHINE_CLASS, required=True, help="機械クラス s,k")
@click.option("--start", type=click.IntRange(min=0), default=0, show_default=True, help="開始順位")
@click.option("--stop", type=click.IntRange(min=0), help="終了順位（含まない）")
@out_option
@click.pass_context
def enumerate_command(ctx, machine_class, start, stop, out):
    """クラスの機械をコード昇順に一覧（code,bits,table）"""
    service = _service(ctx)
    _, text = service.enumerate_class(machine_class, start, stop, out)
    click.echo(text, nl=False)
    return 0


def main() -> None:
    """エントリーポイント"""
    cli(prog_name="hspectra")


if __name__ == "__main__":
    main()
