"""Timing and RFM parameter sets for one simulated DDR5 configuration.

All timings are integer nanoseconds. Defaults model a 2-sub-channel DIMM
with one rank of 32 banks (8 bank groups x 4 banks) per sub-channel.
"""

from __future__ import annotations

from dataclasses import dataclass


class ConfigError(ValueError):
    """Invalid parameter or experiment configuration."""


@dataclass(frozen=True)
class TimingParams:
    trc: int = 48
    trfc: int = 410
    trefi: int = 3900
    trfcsb: int = 190
    trefw: int = 32_000_000
    banks_per_rank: int = 32
    bankgroups: int = 8
    banks_per_group: int = 4
    subchannels: int = 2
    fgr_enabled: bool = False

    def __post_init__(self) -> None:
        for name in ("trc", "trfc", "trefi", "trfcsb", "trefw"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"timing.{name} must be positive")
        if self.banks_per_rank != self.bankgroups * self.banks_per_group:
            raise ConfigError(
                "timing.banks_per_rank must equal bankgroups * banks_per_group"
            )
        if self.subchannels < 1:
            raise ConfigError("timing.subchannels must be >= 1")
        if self.trfc >= self.ref_period:
            raise ConfigError("timing.trfc must be smaller than the REF period")

    @property
    def ref_period(self) -> int:
        """REF spacing: tREFI, halved when fine-granularity refresh is on."""
        return self.trefi // 2 if self.fgr_enabled else self.trefi

    @property
    def acts_per_refi(self) -> int:
        """Max ACTs one bank fits between two REFs: floor((tREFI-tRFC)/tRC)."""
        return (self.trefi - self.trfc) // self.trc


@dataclass(frozen=True)
class RfmParams:
    """RFM accounting thresholds. RAAMMT = 3 x RAAIMT, REF credit = RAAIMT/2."""

    raaimt: int = 32

    def __post_init__(self) -> None:
        if self.raaimt not in (16, 32):
            raise ConfigError("rfm.raaimt must be 16 or 32")

    @property
    def raammt(self) -> int:
        return 3 * self.raaimt

    @property
    def ref_decrement(self) -> int:
        return self.raaimt // 2


@dataclass(frozen=True)
class LimiterParams:
    """Activation-limiting countermeasure: per-(core, bank) ACT budget per tREFI.

    The budget defaults to RAAIMT + RAAIMT/2, the exact per-tREFI counter
    replenishment rate, which caps one core at an average of 1 RFMab/tREFI.
    Activations are unrestricted while no RFM was triggered in the last
    `grace_slots` tREFI intervals.
    """

    enabled: bool = False
    budget: int | None = None
    grace_slots: int = 16

    def resolved_budget(self, rfm: RfmParams) -> int:
        if self.budget is not None:
            if self.budget <= 0:
                raise ConfigError("limiter.budget must be positive")
            return self.budget
        return rfm.raaimt + rfm.raaimt // 2
