"""RFM accounting: per-bank rolling ACT counters and the activation limiter.

The tracker owns the counter protocol only; the memory model decides when
commands are issued and calls the decrement hooks at command completion.
"""

from __future__ import annotations

from .params import RfmParams


class ProtocolError(RuntimeError):
    """RFM contract violation, e.g. incrementing a counter past RAAMMT."""


class RaaTracker:
    """Rolling Accumulated ACT counters for one sub-channel's rank.

    Counters stay within [0, RAAMMT]. When a bank reaches RAAMMT the
    mandatory flag is raised and stays up until the controller's RFM
    completes (a REF may be serialized in front of it; its decrement does
    not cancel the pending RFM).
    """

    def __init__(self, n_banks: int, params: RfmParams, banks_per_group: int) -> None:
        self.params = params
        self.n_banks = n_banks
        self.banks_per_group = banks_per_group
        self.counters = [0] * n_banks
        self.mandatory_pending = False
        self.pending_bank: int | None = None
        # Conservation bookkeeping: increments, effective decrements and the
        # amount lost to clamping at zero, per bank.
        self.total_increments = [0] * n_banks
        self.total_decrements = [0] * n_banks
        self.clamp_loss = [0] * n_banks
        # Counter values captured at each REF completion (after its decrement).
        self.boundary_snapshots: list[tuple[int, ...]] = []

    def bank_set_of(self, bank: int) -> int:
        return bank % self.banks_per_group

    def banks_in_set(self, bank_set: int) -> list[int]:
        return list(range(bank_set, self.n_banks, self.banks_per_group))

    def on_act(self, bank: int) -> int:
        """Count one activation; returns the new value. Sets the mandatory
        flag when the bank hits RAAMMT."""
        if self.counters[bank] >= self.params.raammt:
            raise ProtocolError(
                f"ACT admitted to bank {bank} with RAA counter at RAAMMT "
                f"({self.params.raammt}); scheduler bug"
            )
        self.counters[bank] += 1
        self.total_increments[bank] += 1
        if self.counters[bank] == self.params.raammt:
            self.mandatory_pending = True
            self.pending_bank = bank
        return self.counters[bank]

    def _decrement(self, bank: int, amount: int) -> None:
        value = self.counters[bank]
        applied = min(value, amount)
        self.counters[bank] = value - applied
        self.total_decrements[bank] += applied
        self.clamp_loss[bank] += amount - applied

    def apply_ref_decrement(self) -> None:
        for bank in range(self.n_banks):
            self._decrement(bank, self.params.ref_decrement)

    def apply_rfmab_decrement(self) -> None:
        for bank in range(self.n_banks):
            self._decrement(bank, self.params.raaimt)
        self._refresh_pending()

    def apply_rfmsb_decrement(self, bank_set: int) -> None:
        for bank in self.banks_in_set(bank_set):
            self._decrement(bank, self.params.raaimt)
        self._refresh_pending()

    def _refresh_pending(self) -> None:
        """After an RFM decrement, re-derive the flag: another bank may
        still be saturated and needs its own RFM."""
        for bank in range(self.n_banks):
            if self.counters[bank] >= self.params.raammt:
                self.mandatory_pending = True
                self.pending_bank = bank
                return
        self.mandatory_pending = False
        self.pending_bank = None

    def snapshot(self) -> None:
        self.boundary_snapshots.append(tuple(self.counters))


class ActLimiter:
    """Per-(core, bank) activation budget per tREFI interval.

    A request past the budget is deferred to the next tREFI boundary.
    Budgets are unrestricted while no RFM was triggered within the grace
    window (16 tREFIs by default).
    """

    def __init__(self, budget: int, grace_slots: int) -> None:
        self.budget = budget
        self.grace_slots = grace_slots
        self._used: dict[tuple[int, int], tuple[int, int]] = {}  # (core,bank) -> (slot, count)
        self.last_trigger_slot: int | None = None
        self.denials = 0

    def note_rfm_trigger(self, slot: int) -> None:
        self.last_trigger_slot = slot

    def _grace_active(self, slot: int) -> bool:
        if self.last_trigger_slot is None:
            return True
        return slot - self.last_trigger_slot > self.grace_slots

    def allows(self, core: int, bank: int, slot: int) -> bool:
        if self._grace_active(slot):
            return True
        prev_slot, count = self._used.get((core, bank), (slot, 0))
        if prev_slot != slot:
            count = 0
        return count < self.budget

    def consume(self, core: int, bank: int, slot: int) -> None:
        prev_slot, count = self._used.get((core, bank), (slot, 0))
        if prev_slot != slot:
            count = 0
        self._used[(core, bank)] = (slot, count + 1)
