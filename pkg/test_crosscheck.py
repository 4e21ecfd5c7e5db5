"""
Tests for the cross-check suite
Worked programs pass, injected faults are reported and shrunk
"""

import pytest

import crosscheck
from crosscheck import CrosscheckReport, check_program, check_source, run_corpus, stable_methods
from conftest import ground
from models.interpretation import Interpretation
from parser import parse_program
from semantics import StableCheckMethod


def test_running_example_passes(running):
    """Test every check agrees on the running example"""
    assert check_program(running) == []


def test_small_programs_pass(liar):
    """Test the self-loops and a mixed-connective program"""
    assert check_program(liar) == []
    assert check_source(parse_program("p <- p.")) == []
    assert check_source(parse_program("a <- b + ~c.\nb <- a * #top.\nc <- ~b | #bot.\n")) == []


def test_stable_methods_by_syntax(running):
    """Test the methods offered depend on the syntactic class"""
    assert stable_methods(running) == list(StableCheckMethod)
    methods = stable_methods(ground("p <- q * ~r."))
    assert StableCheckMethod.GL_REDUCT_CLASSICAL not in methods
    assert StableCheckMethod.PSI_PRIME_FIXPOINT in methods
    assert StableCheckMethod.PSI_PRIME_FIXPOINT not in stable_methods(ground("p <- ~(q & r)."))


def test_report_ok():
    """Test ok reflects the divergence list"""
    report = CrosscheckReport(seed=0, programs=0)
    assert report.ok
    report.divergences.append(crosscheck.Divergence("x", "y"))
    assert not report.ok


def test_small_corpus_passes():
    """Test a short seeded corpus"""
    report = run_corpus(seed=42, count=10, max_atoms=3)
    assert report.ok
    assert report.programs == 10


def test_injected_support_fault_is_reported_and_shrunk(monkeypatch):
    """Test a wrong oracle produces a shrunk divergence"""

    def wrong_oracle(g, i, limit=None):
        return Interpretation.bottom_k(g.base, g.kind)

    monkeypatch.setattr(crosscheck, "brute_force_support", wrong_oracle)
    report = run_corpus(seed=1, count=3, max_atoms=3)
    assert not report.ok
    assert {d.check for d in report.divergences} == {"support_oracle"}
    assert len(report.divergences) <= report.programs
    for divergence in report.divergences:
        assert parse_program(divergence.program_text).rules


def test_runex6_shape_passes():
    """Test the runex6 rules with FOUR constants in place of intervals"""
    program = parse_program("a <- a | b.\nb <- (~c & a) | #bot.\nc <- ~b | #f.\n")
    assert check_source(program) == []


def test_unsafe_support_is_reported(monkeypatch, running):
    """Test a rejected support is reported under its own check"""
    monkeypatch.setattr(crosscheck, "is_safe", lambda g, i, j: False)
    divergences = check_program(running)
    assert {d.check for d in divergences} == {"support_safe"}
    assert len(divergences) == 4 ** len(running.base)


if __name__ == "__main__":
    pytest.main([__file__])
