"""
実験サービス

CLIのサブコマンド1つにつき1メソッドで実験を実行し、
設定エコー付きの結果を描画・保存します。
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import pandas as pd

from ..aic.census import halting_census
from ..aic.search import SearchLimits, kt_budget_curve, kt_search
from ..clock.chain import build_chain
from ..clock.hamiltonian import hamiltonian, hamiltonian_frame
from ..config import LabConfig
from ..domain.errors import InvalidMachineError
from ..domain.information import BudgetRule, CensusReport, CurvePoint, KtCertificate, KtQuery
from ..domain.models import (
    MachineClass,
    RunRecord,
    SymbolString,
    TuringMachine,
    format_symbols,
    parse_symbols,
)
from ..domain.spectral import EpsilonVerdict, GapClassification, SpectrumReport
from ..machine.catalog import CATALOG, get_machine
from ..machine.codec import check_class_size, code_bit_length, decode, encode, iter_class
from ..machine.description import load_machine_file
from ..machine.simulator import run
from ..observability.logger import LoggerFactory
from ..spectra.classify import gap_below_epsilon, gap_sweep
from ..spectra.solver import spectrum_report
from ..utils import DebugTimer
from .output_writer import OutputWriter

logger = logging.getLogger(__name__)
run_logger = LoggerFactory.create_logger("hspectra.run")


@dataclass(frozen=True)
class ExperimentConfig:
    """出力ヘッダに埋め込む実験設定（同じ設定で結果を再現できる）"""

    subcommand: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    lab: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {"subcommand": self.subcommand, "parameters": self.parameters, "lab": self.lab}


class ExperimentService:
    """
    実験サービス

    設定（LabConfig）からリソース上限や許容誤差を取り出し、
    ライブラリ関数を呼び出して結果を OutputWriter で保存します。
    """

    def __init__(self, config: LabConfig, writer: OutputWriter):
        self.config = config
        self.writer = writer

    # 共通処理

    def resolve_machine(
        self,
        machine_ref: Optional[str] = None,
        code: Optional[int] = None,
        machine_class: Optional[MachineClass] = None,
    ) -> TuringMachine:
        """
        --machine（カタログ名またはファイル）か --code/--class から機械を得る
        """
        if machine_ref is not None:
            if machine_ref in CATALOG:
                machine = get_machine(machine_ref)
            else:
                path = Path(machine_ref)
                if not path.is_file():
                    raise InvalidMachineError(
                        f"機械記述ファイルもカタログ名も見つかりません: {machine_ref}"
                    )
                machine = load_machine_file(path)
        elif code is not None and machine_class is not None:
            self._check_class(machine_class)
            machine = decode(code, machine_class)
        else:
            raise InvalidMachineError("--machine か --code と --class の組を指定してください")
        self._check_class(machine.machine_class)
        return machine

    def _check_class(self, machine_class: MachineClass) -> None:
        machine_class.check_symbol_cap(self.config.machine.max_symbols)

    def experiment_config(self, subcommand: str, **parameters: Any) -> ExperimentConfig:
        return ExperimentConfig(subcommand, parameters, self.config.echo_dict())

    def _limits(self) -> SearchLimits:
        search = self.config.search
        return SearchLimits(
            max_class_size=search.max_class_size,
            max_total_steps=search.max_total_steps,
            shard_size=search.shard_size,
            threads=self.config.runtime.threads,
            cap_visited=self.config.machine.cap_visited,
        )

    def _emit_json(self, payload: Dict[str, Any], out: Optional[Path]) -> str:
        if out is not None:
            self.writer.write_json(out, payload)
        return self.writer.render_json(payload)

    @staticmethod
    def _provenance(machine: TuringMachine, symbols: SymbolString) -> Dict[str, Any]:
        return {
            "class": str(machine.machine_class),
            "code": encode(machine).code,
            "table": machine.to_table_string(),
            "input": format_symbols(symbols),
        }

    # サブコマンド

    def run_machine(
        self,
        machine: TuringMachine,
        symbols: SymbolString,
        budget: int,
        out: Optional[Path] = None,
    ) -> Tuple[RunRecord, str]:
        """run: 予算付き実行の記録をJSONで返す"""
        record = run(machine, symbols, budget, cap_visited=self.config.machine.cap_visited)
        run_logger.log_run_outcome(
            record.outcome.value, record.steps, budget, code=encode(machine).code
        )
        experiment = self.experiment_config(
            "run", budget=budget, **self._provenance(machine, symbols)
        )
        payload = {**record.to_dict(), "config": experiment.to_dict()}
        return record, self._emit_json(payload, out)

    def spectrum(
        self,
        machine: TuringMachine,
        symbols: SymbolString,
        truncation: int,
        site: int = 0,
        out: Optional[Path] = None,
        hamiltonian_out: Optional[Path] = None,
    ) -> Tuple[SpectrumReport, str]:
        """spectrum: クロック鎖のスペクトルとLDOS"""
        chain = build_chain(
            machine, symbols, truncation, cap_visited=self.config.machine.cap_visited
        )
        h = hamiltonian(chain)
        report = spectrum_report(h, site, self.config.spectra.tolerance)
        experiment = self.experiment_config(
            "spectrum", truncation=truncation, site=site, **self._provenance(machine, symbols)
        ).to_dict()

        if out is not None:
            frame = pd.DataFrame(
                {
                    "j": range(1, report.dimension + 1),
                    "eigenvalue": report.eigenvalues,
                    "ldos_weight": report.ldos_weights,
                }
            )
            self.writer.write_csv(out, frame, experiment)
        if hamiltonian_out is not None:
            self.writer.write_csv(hamiltonian_out, hamiltonian_frame(h), experiment)

        payload = {
            "chain": chain.to_dict(),
            "ground_gap": report.ground_gap,
            "dimension": report.dimension,
            "config": experiment,
        }
        return report, self.writer.render_json(payload)

    def gap_sweep(
        self,
        machine: TuringMachine,
        symbols: SymbolString,
        truncations: Sequence[int],
        out: Optional[Path] = None,
    ) -> Tuple[GapClassification, str]:
        """gap-sweep: 打ち切りスイープと1行要約"""
        spectra = self.config.spectra
        with DebugTimer("gap-sweep"):
            classification = gap_sweep(
                machine,
                symbols,
                truncations,
                tol=spectra.tolerance,
                band_exponent=spectra.band_exponent,
                band_width=spectra.band_width,
                cap_visited=self.config.machine.cap_visited,
            )
        if out is not None:
            experiment = self.experiment_config(
                "gap-sweep", truncations=list(truncations), **self._provenance(machine, symbols)
            )
            frame = pd.DataFrame(
                [point.to_row() for point in classification.sweep],
                columns=["truncation", "length", "halted", "gap", "exponent_so_far"],
            )
            self.writer.write_csv(out, frame, experiment.to_dict())
        return classification, classification.summary_line() + "\n"

    def gap_epsilon(
        self,
        machine: TuringMachine,
        symbols: SymbolString,
        epsilon: float,
        budget_truncation: int,
        out: Optional[Path] = None,
    ) -> Tuple[EpsilonVerdict, str]:
        """gap-epsilon: ギャップ < ε の三分法判定"""
        verdict = gap_below_epsilon(
            machine,
            symbols,
            epsilon,
            budget_truncation,
            tol=self.config.spectra.tolerance,
            cap_visited=self.config.machine.cap_visited,
        )
        experiment = self.experiment_config(
            "gap-epsilon",
            epsilon=epsilon,
            budget_truncation=budget_truncation,
            **self._provenance(machine, symbols),
        )
        payload = {**verdict.to_dict(), "config": experiment.to_dict()}
        return verdict, self._emit_json(payload, out)

    def budget_rule(self, c2: Optional[int], c0: Optional[int]) -> BudgetRule:
        search = self.config.search
        return BudgetRule(
            search.budget_c2 if c2 is None else c2, search.budget_c0 if c0 is None else c0
        )

    def kt(
        self,
        target: SymbolString,
        machine_class: MachineClass,
        c2: Optional[int] = None,
        c0: Optional[int] = None,
        out: Optional[Path] = None,
    ) -> Tuple[KtCertificate, str]:
        """kt: 時間制限付き最短コードの証明書"""
        self._check_class(machine_class)
        query = KtQuery(parse_symbols(target), machine_class, self.budget_rule(c2, c0))
        certificate = kt_search(query, self._limits())
        experiment = self.experiment_config("kt", **query.to_dict()).to_dict()

        if out is not None:
            found = certificate.found
            frame = pd.DataFrame(
                [
                    {
                        "target": certificate.target_echo,
                        "class": str(machine_class),
                        "budget": certificate.budget,
                        "found": found is not None,
                        "code": None if found is None else found.code,
                        "code_bits": certificate.code_bit_length,
                        "halt_steps": None if found is None else found.halt_steps,
                        "exhaustive_up_to": certificate.exhaustive_up_to,
                        "machines_searched": certificate.machines_searched,
                        "complete": certificate.complete,
                    }
                ]
            )
            self.writer.write_csv(out, frame, experiment)
        payload = {**certificate.to_dict(), "config": experiment}
        return certificate, self.writer.render_json(payload)

    def kt_curve(
        self,
        target: SymbolString,
        machine_class: MachineClass,
        budgets: Sequence[int],
        out: Optional[Path] = None,
    ) -> Tuple[List[CurvePoint], str]:
        """kt-curve: 予算ごとの K_t 系列"""
        self._check_class(machine_class)
        points = kt_budget_curve(parse_symbols(target), machine_class, budgets, self._limits())
        frame = pd.DataFrame(
            [point.to_row() for point in points],
            columns=["budget", "found", "code_bits", "halt_steps"],
        )
        experiment = self.experiment_config(
            "kt-curve",
            target=format_symbols(parse_symbols(target)),
            **{"class": str(machine_class)},
            budgets=list(budgets),
        ).to_dict()
        if out is not None:
            self.writer.write_csv(out, frame, experiment)
        payload = {"points": [point.to_dict() for point in points], "config": experiment}
        return points, self.writer.render_json(payload)

    def census(
        self, machine_class: MachineClass, budget: int, out: Optional[Path] = None
    ) -> Tuple[CensusReport, str]:
        """census: クラス全体の停止センサス"""
        self._check_class(machine_class)
        limits = self._limits()
        report = halting_census(
            machine_class,
            budget,
            threads=limits.threads,
            shard_size=limits.shard_size,
            max_class_size=limits.max_class_size,
            cap_visited=limits.cap_visited,
        )
        experiment = self.experiment_config(
            "census", budget=budget, **{"class": str(machine_class)}
        ).to_dict()
        if out is not None:
            frame = pd.DataFrame(
                [row.to_row() for row in report.rows], columns=["code", "outcome", "steps"]
            )
            self.writer.write_csv(out, frame, experiment)
        payload = {**report.to_dict(), "config": experiment}
        return report, self.writer.render_json(payload)

    def enumerate_class(
        self,
        machine_class: MachineClass,
        start: int = 0,
        stop: Optional[int] = None,
        out: Optional[Path] = None,
    ) -> Tuple[pd.DataFrame, str]:
        """enumerate: クラスの機械をコード昇順に一覧"""
        self._check_class(machine_class)
        check_class_size(machine_class, self.config.search.max_class_size)
        frame = pd.DataFrame(
            [
                {"code": code, "bits": code_bit_length(code), "table": machine.to_table_string()}
                for code, machine in iter_class(machine_class, start, stop)
            ],
            columns=["code", "bits", "table"],
        )
        experiment = self.experiment_config(
            "enumerate", start=start, stop=stop, **{"class": str(machine_class)}
        ).to_dict()
        if out is not None:
            self.writer.write_csv(out, frame, experiment)
            return frame, ""
        return frame, frame.to_csv(index=False, lineterminator="\n")
