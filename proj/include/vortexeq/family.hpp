#ifndef VORTEXEQ_FAMILY_HPP
#define VORTEXEQ_FAMILY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "exact.hpp"
#include "half_poly.hpp"

namespace vortexeq
{

enum class Family
{
    AdlerMoser,
    Lambda2Ascending,
    Lambda2Descending,
    TerminatingHalf,
    TerminatingL2,
};

inline constexpr Family kAllFamilies[] = {Family::AdlerMoser, Family::Lambda2Ascending, Family::Lambda2Descending,
                                          Family::TerminatingHalf, Family::TerminatingL2};

inline std::string_view family_name(Family f)
{
    switch (f)
    {
    case Family::AdlerMoser: return "am";
    case Family::Lambda2Ascending: return "l2";
    case Family::Lambda2Descending: return "l2-neg";
    case Family::TerminatingHalf: return "am-half";
    case Family::TerminatingL2: return "l2-term";
    }
    return "?";
}

inline Family parse_family(std::string_view name)
{
    for (Family f : kAllFamilies)
        if (family_name(f) == name)
            return f;
    throw ParseError("unknown family '" + std::string(name) + "'");
}

/// Charge of the second species (the first is -1).
inline long family_lambda(Family f)
{
    return (f == Family::AdlerMoser || f == Family::TerminatingHalf) ? 1 : 2;
}

/// Two-species families whose pairs solve the bilinear equation.
inline bool is_standard(Family f)
{
    return f == Family::AdlerMoser || f == Family::Lambda2Ascending || f == Family::Lambda2Descending;
}

/// Ordered name → value map; iteration follows injection order.
class ParamMap
{
public:
    void set(const std::string& name, GaussianRational v)
    {
        for (auto& [k, val] : entries_)
            if (k == name)
            {
                val = std::move(v);
                return;
            }
        entries_.emplace_back(name, std::move(v));
    }

    std::optional<GaussianRational> find(const std::string& name) const
    {
        for (const auto& [k, v] : entries_)
            if (k == name)
                return v;
        return std::nullopt;
    }

    GaussianRational get_or_zero(const std::string& name) const { return find(name).value_or(GaussianRational(0)); }

    const std::vector<std::pair<std::string, GaussianRational>>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    friend bool operator==(const ParamMap& a, const ParamMap& b) { return a.entries_ == b.entries_; }

private:
    std::vector<std::pair<std::string, GaussianRational>> entries_;
};

/// One equilibrium pair of a sequence. For Λ = 1 families the q slot holds
/// P_{n+1} (charge +1) and the p slot P_n (charge -1); for Λ = 2 families
/// q carries charge +2 and p charge -1.
struct SequenceItem
{
    Family family = Family::AdlerMoser;
    int n = 0; ///< index of the q member
    int q_index = 0;
    int p_index = 0;
    HalfPoly q;
    HalfPoly p;
    ParamMap params;                       ///< cumulative, injection order
    std::vector<GaussianRational> scales;  ///< cumulative recurrence constants
    std::vector<std::string> warnings;

    std::string label() const
    {
        if (family_lambda(family) == 1)
            return "(P_" + std::to_string(p_index) + ",P_" + std::to_string(q_index) + ")";
        return "(q_" + std::to_string(q_index) + ",p_" + std::to_string(p_index) + ")";
    }
};

/// One generated member, with the induced constants of its Abel identity.
struct StepRecord
{
    std::string member;      ///< e.g. "P_3", "q_2", "p_-1"
    std::string param;       ///< injected parameter name, empty when gauge-fixed
    GaussianRational param_value;
    GaussianRational abel_scale; ///< c in g'f - gf' = c·W
    GaussianRational constant;   ///< constant as written in the recurrence
};

struct Termination
{
    std::string member; ///< the member that could not be produced
    int index = 0;
    std::string reason;
};

struct Sequence
{
    Family family = Family::AdlerMoser;
    int n_target = 0;
    std::vector<SequenceItem> items;
    std::vector<StepRecord> steps;
    std::optional<Termination> termination;
};

struct ChainMember
{
    int index = 0;
    HalfPoly poly;
};

/// The τ-members of a sequence in chain order: P_0, P_1, ... for Λ = 1;
/// q_0, q_1, ... (ascending) or q_0, q_-1, ... (descending) for Λ = 2.
inline std::vector<ChainMember> tau_chain(const Sequence& seq)
{
    std::map<int, HalfPoly> members;
    for (const auto& it : seq.items)
    {
        members.emplace(it.q_index, it.q);
        if (family_lambda(seq.family) == 1)
            members.emplace(it.p_index, it.p);
    }
    std::vector<ChainMember> out;
    for (auto& [k, v] : members)
        out.push_back({k, v});
    if (seq.family == Family::Lambda2Descending)
        std::reverse(out.begin(), out.end());
    return out;
}

/// p members of a Λ = 2 sequence keyed by index.
inline std::map<int, HalfPoly> p_members(const Sequence& seq)
{
    std::map<int, HalfPoly> out;
    for (const auto& it : seq.items)
        out.emplace(it.p_index, it.p);
    return out;
}

inline long adler_moser_degree(long n) { return n * (n + 1) / 2; }
inline long lambda2_q_degree(long n) { return n * (3 * n - 1) / 2; }
inline long lambda2_p_degree(long n) { return n * (3 * n + 2); }

} // namespace vortexeq

#endif
