#ifndef UMBRAL_GROUPS_HPP
#define UMBRAL_GROUPS_HPP

#include "umbral/cyclotomic.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace umbral {

struct RootSystemId {
    std::string label;    // e.g. "A7^2D5^2"
    std::string lambency; // e.g. "8", "6+3", "30+6,10,15"
    long coxeter = 0;     // m^X
    std::vector<std::tuple<char, long, long>> components; // (type, rank, multiplicity)

    bool has_type(char t) const;
    /// I^X: {1..m-1} if an A component exists; {1,3,..,m/2} for pure D;
    /// {1,4,5} for E6^4 and {1,7} for E8^3.
    std::vector<long> iset() const;
};

struct TwistedEuler {
    long ng = 1, hg = 1;
    std::optional<long> chiA_bar, chiA, chiD_bar, chiD, chiD_check, chiE_bar, chiE;
};

/// One umbral group: conjugacy classes, power maps, irreducible characters
/// over cyclotomic values, twisted Euler characters. Class sizes are derived
/// from column orthogonality, never transcribed; both orthogonality relations
/// are validated exactly at load (DataCorrupt on failure).
class GroupTable {
public:
    static const GroupTable& load(const std::string& xlabel);
    static const std::vector<std::string>& all_root_systems();
    static const GroupTable& by_lambency(const std::string& ell);

    const RootSystemId& root_system() const { return rs_; }
    const std::string& group_name() const { return group_; }

    size_t num_classes() const { return classes_.size(); }
    const std::vector<std::string>& classes() const { return classes_; }
    size_t class_index(const std::string& cls) const;
    long class_order(const std::string& cls) const; // numeric part of the label

    size_t num_chars() const { return chars_.size(); }
    const Cyclotomic& chi(size_t chi_idx, size_t class_idx) const { return chars_[chi_idx][class_idx]; }
    char frobenius_schur(size_t chi_idx) const { return fs_[chi_idx]; }

    const Int& group_order() const { return order_; }
    const Int& centralizer_order(const std::string& cls) const;
    Int class_size(const std::string& cls) const;

    /// Class of g^p; PrimeNotTabulated if the table lists no row for p.
    const std::string& power_map(const std::string& cls, long p) const;

    /// Twisted Euler record, resolved through class fusion.
    const TwistedEuler& twisted(const std::string& cls) const;
    const std::string& fused_label(const std::string& cls) const;
    /// Distinct fused labels in table order.
    const std::vector<std::string>& fused_labels() const { return fused_order_; }
    const std::vector<std::string>& fused_members(const std::string& fused) const;

private:
    GroupTable() = default;
    void validate() const;

    RootSystemId rs_;
    std::string group_;
    std::vector<std::string> classes_;
    std::vector<char> fs_;
    std::vector<std::vector<Cyclotomic>> chars_;
    std::map<long, std::vector<std::string>> powermaps_;
    std::map<std::string, TwistedEuler> twisted_;
    std::map<std::string, std::string> fused_of_;
    std::vector<std::string> fused_order_;
    std::map<std::string, std::vector<std::string>> fusion_members_;
    Int order_;
    std::vector<Int> centralizers_;
    friend GroupTable parse_group_file(const std::string&);
};

/// Parses the character-value mini language: integers or [-][k][~]{a|b}n.
Cyclotomic parse_char_value(const std::string& token);

std::string data_dir();

} // namespace umbral

#endif
