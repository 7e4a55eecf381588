"""One-stop construction: presentation + H-class selector → everything."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from .engine import (DEFAULT_MAX_RULES, CompleteSystem, MonoidUniverse, critical_circuits,
                     enumerate_universe, knuth_bendix)
from .green import GreenStructure, PermGroup, compute_green, schutz_direct
from .grouptools import FiniteGroupTable, enumerate_group
from .paths import DGPath
from .schutz import SchutzData, SchutzPresentation, build_presentation, choose_representatives
from .squier import DEFAULT_PATH_CAP, build_homotopy_base
from .words import EMPTY, MonoidPresentation, Word


@dataclass
class Caps:
    max_elements: int = 10_000
    kb_max_rules: int = DEFAULT_MAX_RULES
    path_cap: int = DEFAULT_PATH_CAP


@dataclass
class Instance:
    pres: MonoidPresentation
    system: CompleteSystem
    universe: MonoidUniverse
    green: GreenStructure
    caps: Caps = field(default_factory=Caps)

    @classmethod
    def build(cls, pres: MonoidPresentation, caps: Optional[Caps] = None) -> "Instance":
        caps = caps or Caps()
        cs = knuth_bendix(pres, max_rules=caps.kb_max_rules)
        u = enumerate_universe(cs, cap=caps.max_elements)
        return cls(pres, cs, u, compute_green(u), caps)

    def h_class_of(self, w: Word) -> int:
        return self.green.h_class_of[self.universe.element(w)]

    def schutz(self, h_word: Word, e_word: Word = EMPTY, completed: bool = False) -> "SchutzRun":
        H = self.h_class_of(h_word)
        d = choose_representatives(self.universe, self.green, H, e_word, h_word)
        pres = self.system.presentation if completed else self.pres
        return SchutzRun(self, d, build_presentation(d, pres))


@dataclass
class SchutzRun:
    inst: Instance
    data: SchutzData
    sp: SchutzPresentation
    _group: Optional[FiniteGroupTable] = None

    @property
    def H(self) -> int:
        return self.data.H

    @property
    def group(self) -> FiniteGroupTable:
        if self._group is None:
            self._group = enumerate_group(self.sp.q, max_rules=self.inst.caps.kb_max_rules,
                                          cap=self.inst.caps.max_elements)
        return self._group

    def direct(self) -> PermGroup:
        return schutz_direct(self.inst.universe, self.inst.green, self.H)

    def homotopy_base(self, X: Optional[Sequence[DGPath]] = None):
        """Y1 ∪ Y2 ∪ Y3; X defaults to the critical circuits of the completed system,
        in which case this run must have been built over the completed presentation."""
        if X is None:
            X = [c.path for c in critical_circuits(self.inst.system)]
        return build_homotopy_base(self.sp, X, path_cap=self.inst.caps.path_cap, group=self.group)


def homotopy_run(pres: MonoidPresentation, h_word: Word, e_word: Word = EMPTY,
                 caps: Optional[Caps] = None):
    inst = Instance.build(pres, caps)
    run = inst.schutz(h_word, e_word, completed=True)
    hb, cp = run.homotopy_base()
    return run, hb, cp


def all_h_representatives(inst: Instance) -> List[Word]:
    return [inst.universe.word(cls[0]) for cls in inst.green.h_classes]
