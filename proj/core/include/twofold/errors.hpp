#pragma once

#include <stdexcept>
#include <string>

namespace twofold {

/// Base class for all engine-level failures.
class EngineError : public std::runtime_error {
public:
    explicit EngineError(const std::string& what) : std::runtime_error(what) {}
};

/// Two vectors (or a vector and a set) indexed by different state spaces.
class DimensionMismatchError : public EngineError {
public:
    explicit DimensionMismatchError(const std::string& what = "dimension mismatch")
        : EngineError(what) {}
};

/// A constructor invariant was violated (bad prior, empty set, alpha out of range, ...).
class InvalidArgumentError : public EngineError {
public:
    explicit InvalidArgumentError(const std::string& what) : EngineError(what) {}
};

/// separating_functional was asked to separate a point that lies inside the set.
class NotSeparableError : public EngineError {
public:
    explicit NotSeparableError(const std::string& what = "not separable") : EngineError(what) {}
};

/// Construction of a twofold-conservative preference with disjoint prior sets.
class DisjointPriorSetsError : public EngineError {
public:
    explicit DisjointPriorSetsError(const std::string& what) : EngineError(what) {}
};

/// justifiable_negation requires C = D.
class AsymmetricPreferenceError : public EngineError {
public:
    explicit AsymmetricPreferenceError(const std::string& what = "asymmetric preference")
        : EngineError(what) {}
};

/// Elicitation bracket does not straddle the support value.
class BracketError : public EngineError {
public:
    explicit BracketError(const std::string& what = "bracket invalid") : EngineError(what) {}
};

/// The oracle's answers violate the monotone structure the representation implies.
class InconsistentOracleError : public EngineError {
public:
    explicit InconsistentOracleError(const std::string& what = "inconsistent oracle")
        : EngineError(what) {}
};

/// Direction set for recovery does not span or misses a coordinate axis.
class DegenerateDirectionsError : public EngineError {
public:
    explicit DegenerateDirectionsError(const std::string& what = "degenerate directions")
        : EngineError(what) {}
};

/// The requested axiom cannot be audited against the supplied engine.
class UnsupportedAxiomError : public EngineError {
public:
    explicit UnsupportedAxiomError(const std::string& what) : EngineError(what) {}
};

/// Witness construction requires a non-degenerate prior set.
class PreferenceIsSeuError : public EngineError {
public:
    explicit PreferenceIsSeuError(const std::string& what = "preference is SEU")
        : EngineError(what) {}
};

/// Cross-engine checks require identical utility normalizations.
class NormalizationMismatchError : public EngineError {
public:
    explicit NormalizationMismatchError(const std::string& what = "normalization mismatch")
        : EngineError(what) {}
};

/// Scenario file failed to parse or violates an invariant; message names the entity.
class ScenarioError : public EngineError {
public:
    explicit ScenarioError(const std::string& what) : EngineError(what) {}
};

/// An internal consistency law failed (geometric vs behavioral verdicts, witness replay).
/// Indicates an implementation bug, never bad user input.
class PropertyCheckError : public EngineError {
public:
    explicit PropertyCheckError(const std::string& what) : EngineError(what) {}
};

}  // namespace twofold
