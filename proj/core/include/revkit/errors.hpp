// Exception hierarchy for the library.  Every throwing operation uses a
// distinct type so that callers (and the CLI) can map failures to precise
// messages and exit codes without string matching.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "revkit/model_set.hpp"

namespace revkit {

// Root of all library errors.
class RevkitError : public std::runtime_error {
public:
    explicit RevkitError(const std::string& what) : std::runtime_error(what) {}
};

// A JSON input violated the documented file format.  `path` points at the
// first offending element (e.g. "/sentences/3/models/0").
class LogicFormatError : public RevkitError {
public:
    LogicFormatError(std::string path, const std::string& message)
        : RevkitError(path + ": " + message), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

// The combination of two bases has no base with the required model set in an
// explicitly-listed family.
class FamilyNotClosed : public RevkitError {
public:
    explicit FamilyNotClosed(const std::string& what) : RevkitError(what) {}
};

// A single-sentence family was asked to combine two sentences for which no
// conjunction is available (no table entry and no sentence with the
// intersected model set).
class UnsupportedConjunction : public RevkitError {
public:
    UnsupportedConjunction(int sentence_a, int sentence_b, const std::string& what)
        : RevkitError(what), a_(sentence_a), b_(sentence_b) {}
    int sentence_a() const { return a_; }
    int sentence_b() const { return b_; }

private:
    int a_, b_;
};

// Enumerating the family would exceed the configured cap (see
// REVKIT_ENUM_CAP); prevents accidental 2^|L| blow-ups.
class EnumerationTooLarge : public RevkitError {
public:
    EnumerationTooLarge(int sentence_count, int cap)
        : RevkitError("powerset family over " + std::to_string(sentence_count) +
                      " sentences exceeds enumeration cap " + std::to_string(cap)),
          sentence_count_(sentence_count), cap_(cap) {}
    int sentence_count() const { return sentence_count_; }
    int cap() const { return cap_; }

private:
    int sentence_count_, cap_;
};

// A set of interpretations that must become some base's model set (e.g. a
// minimum during operator synthesis) is not expressible in the family.
class MinSetInexpressible : public RevkitError {
public:
    explicit MinSetInexpressible(ModelSet models, const std::string& context = "")
        : RevkitError("no base in the family has the required model set" +
                      (context.empty() ? std::string() : " (" + context + ")")),
          models_(models) {}
    const ModelSet& models() const { return models_; }

private:
    ModelSet models_;
};

// The classical pairwise encoding needs a base whose models are exactly the
// two queried interpretations, and the family has none.
class FormInexpressible : public RevkitError {
public:
    FormInexpressible(int omega1, int omega2)
        : RevkitError("no base has model set {" + std::to_string(omega1) + "," +
                      std::to_string(omega2) + "}"),
          w1_(omega1), w2_(omega2) {}
    int omega1() const { return w1_; }
    int omega2() const { return w2_; }

private:
    int w1_, w2_;
};

// A relation handed to a preorder-only algorithm is not reflexive+transitive.
class NotAPreorder : public RevkitError {
public:
    NotAPreorder(int omega1, int omega2, int omega3, const std::string& what)
        : RevkitError(what), w1_(omega1), w2_(omega2), w3_(omega3) {}
    int omega1() const { return w1_; }
    int omega2() const { return w2_; }
    int omega3() const { return w3_; }

private:
    int w1_, w2_, w3_;
};

// An analysis requires the operator to satisfy some postulates first; the
// message names the ones that failed.
class PostulatePrerequisiteFailed : public RevkitError {
public:
    explicit PostulatePrerequisiteFailed(const std::string& failed_postulates)
        : RevkitError("operator does not satisfy required postulates: " + failed_postulates),
          failed_(failed_postulates) {}
    const std::string& failed_postulates() const { return failed_; }

private:
    std::string failed_;
};

// The logic admits a critical loop, so no total-preorder construction can
// exist for every operator; reported by the pipeline before it starts.
class CriticalLoopPresent : public RevkitError {
public:
    explicit CriticalLoopPresent(int loop_length, const std::string& summary)
        : RevkitError("critical loop present: " + summary), length_(loop_length) {}
    int loop_length() const { return length_; }

private:
    int length_;
};

// A user-supplied loop does not satisfy the loop conditions.
class InvalidLoop : public RevkitError {
public:
    explicit InvalidLoop(const std::string& what) : RevkitError(what) {}
};

// Brute-force relation search only works for small universes.
class OmegaTooLarge : public RevkitError {
public:
    OmegaTooLarge(int omega, int limit)
        : RevkitError("universe of " + std::to_string(omega) +
                      " interpretations exceeds the search limit " + std::to_string(limit)),
          omega_(omega), limit_(limit) {}
    int omega() const { return omega_; }
    int limit() const { return limit_; }

private:
    int omega_, limit_;
};

// Gallery lookups.
class UnknownGalleryName : public RevkitError {
public:
    explicit UnknownGalleryName(const std::string& name)
        : RevkitError("unknown gallery entry: " + name), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

class OutOfScopeInfinite : public RevkitError {
public:
    explicit OutOfScopeInfinite(const std::string& name)
        : RevkitError("gallery entry '" + name + "' has an infinite universe and is out of scope"),
          name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

// A table-backed operator with fallback "error" was asked about a pair it
// does not cover.
class OperatorDomainError : public RevkitError {
public:
    explicit OperatorDomainError(const std::string& what) : RevkitError(what) {}
};

} // namespace revkit
