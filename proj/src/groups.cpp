#include "umbral/groups.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <mutex>

namespace umbral {

std::string data_dir() {
    if (const char* env = std::getenv("UMBRAL_DATA_DIR")) return env;
#ifdef UMBRAL_DATA_DIR
    return UMBRAL_DATA_DIR;
#else
    return "data";
#endif
}

bool RootSystemId::has_type(char t) const {
    for (const auto& [ty, r, m] : components)
        if (ty == t) return true;
    return false;
}

std::vector<long> RootSystemId::iset() const {
    std::vector<long> out;
    long m = coxeter;
    if (has_type('A')) {
        for (long r = 1; r < m; ++r) out.push_back(r);
    } else if (has_type('D')) {
        for (long r = 1; r <= m / 2; r += 2) out.push_back(r);
    } else if (label == "E6^4") {
        out = {1, 4, 5};
    } else if (label == "E8^3") {
        out = {1, 7};
    }
    return out;
}

Cyclotomic parse_char_value(const std::string& token) {
    size_t i = 0;
    bool neg = false;
    if (i < token.size() && token[i] == '-') {
        neg = true;
        ++i;
    }
    long coeff = 1;
    size_t j = i;
    while (j < token.size() && isdigit(token[j])) ++j;
    bool pure_int = (j == token.size());
    if (pure_int) {
        Rational v = Rational::parse(token);
        return Cyclotomic(v);
    }
    if (j > i) coeff = std::stol(token.substr(i, j - i));
    i = j;
    bool conj = false;
    if (i < token.size() && token[i] == '~') {
        conj = true;
        ++i;
    }
    if (i >= token.size() || (token[i] != 'a' && token[i] != 'b'))
        throw std::domain_error("parse_char_value: bad token " + token);
    char kind = token[i++];
    long n = std::stol(token.substr(i));
    Cyclotomic v = kind == 'a' ? Cyclotomic::sqrt_minus(n) : Cyclotomic::b_n(n);
    if (conj) v = v.conj();
    v = v * Rational(neg ? -coeff : coeff);
    return v;
}

namespace {

const std::map<std::string, std::string>& file_map() {
    static const std::map<std::string, std::string> m = {
        {"A1^24", "A1_24"},   {"A2^12", "A2_12"},     {"A3^8", "A3_8"},
        {"A4^6", "A4_6"},     {"A5^4D4", "A5_4D4"},   {"A6^4", "A6_4"},
        {"A7^2D5^2", "A7_2D5_2"}, {"A8^3", "A8_3"},   {"A9^2D6", "A9_2D6"},
        {"A11D7E6", "A11D7E6"}, {"A12^2", "A12_2"},   {"A15D9", "A15D9"},
        {"A17E7", "A17E7"},   {"A24", "A24"},         {"D4^6", "D4_6"},
        {"D6^4", "D6_4"},     {"D8^3", "D8_3"},       {"D10E7^2", "D10E7_2"},
        {"D12^2", "D12_2"},   {"D16E8", "D16E8"},     {"D24", "D24"},
        {"E6^4", "E6_4"},     {"E8^3", "E8_3"},
    };
    return m;
}

} // namespace

GroupTable parse_group_file(const std::string& xlabel) {
    auto it = file_map().find(xlabel);
    if (it == file_map().end()) throw std::domain_error("unknown root system: " + xlabel);
    std::string path = data_dir() + "/groups/" + it->second + ".json";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open group data file " + path);
    nlohmann::json j;
    in >> j;

    GroupTable t;
    t.rs_.label = j.at("X").get<std::string>();
    t.rs_.lambency = j.at("lambency").get<std::string>();
    t.rs_.coxeter = j.at("coxeter").get<long>();
    for (const auto& c : j.at("components"))
        t.rs_.components.emplace_back(c.at(0).get<std::string>()[0], c.at(1).get<long>(),
                                      c.at(2).get<long>());
    t.group_ = j.at("group").get<std::string>();
    t.classes_ = j.at("classes").get<std::vector<std::string>>();
    for (const auto& f : j.at("fs")) t.fs_.push_back(f.get<std::string>()[0]);
    for (const auto& [p, v] : j.at("powermaps").items())
        t.powermaps_[std::stol(p)] = v.get<std::vector<std::string>>();
    for (const auto& row : j.at("chars")) {
        std::vector<Cyclotomic> r;
        for (const auto& tok : row) r.push_back(parse_char_value(tok.get<std::string>()));
        t.chars_.push_back(std::move(r));
    }
    std::map<std::string, std::string> fused_of;
    for (const auto& c : t.classes_) fused_of[c] = c;
    if (j.contains("fusions"))
        for (const auto& [label, members] : j.at("fusions").items()) {
            fused_of[label] = label; // fused labels resolve to themselves
            for (const auto& m : members) fused_of[m.get<std::string>()] = label;
        }
    t.fused_of_ = std::move(fused_of);
    for (const auto& c : t.classes_) {
        const std::string& f = t.fused_of_.at(c);
        t.fusion_members_[f].push_back(c);
        if (t.fusion_members_.at(f).size() == 1) t.fused_order_.push_back(f);
    }
    for (const auto& [label, rec] : j.at("twisted").items()) {
        TwistedEuler te;
        te.ng = rec.at("ng").get<long>();
        te.hg = rec.at("hg").get<long>();
        auto opt = [&](const char* k) -> std::optional<long> {
            if (rec.contains(k)) return rec.at(k).get<long>();
            return std::nullopt;
        };
        te.chiA_bar = opt("chiA_bar");
        te.chiA = opt("chiA");
        te.chiD_bar = opt("chiD_bar");
        te.chiD = opt("chiD");
        te.chiD_check = opt("chiD_check");
        te.chiE_bar = opt("chiE_bar");
        te.chiE = opt("chiE");
        t.twisted_[label] = te;
    }

    // Derived data: |G| from degrees, centralizers from column orthogonality.
    size_t nc = t.classes_.size();
    t.order_ = 0;
    for (const auto& row : t.chars_) {
        Rational d = row[0].rational_part();
        t.order_ += d.num() * d.num();
    }
    t.centralizers_.resize(nc);
    for (size_t g = 0; g < nc; ++g) {
        Cyclotomic s{Rational(0l)};
        for (const auto& row : t.chars_) s += row[g] * row[g].conj();
        if (!s.is_rational() || !s.rational_part().is_integer() || s.rational_part().sign() <= 0)
            throw std::runtime_error("NonIntegerCentralizer: " + xlabel + " class " +
                                     t.classes_[g]);
        t.centralizers_[g] = s.rational_part().num();
        if (t.order_ % t.centralizers_[g] != 0)
            throw std::runtime_error("DataCorrupt: centralizer does not divide |G| in " + xlabel);
    }
    t.validate();
    return t;
}

void GroupTable::validate() const {
    size_t nc = classes_.size();
    // Row orthogonality with derived class sizes.
    for (size_t i = 0; i < chars_.size(); ++i) {
        for (size_t k = i; k < chars_.size(); ++k) {
            Cyclotomic s{Rational(0l)};
            for (size_t g = 0; g < nc; ++g) {
                Rational w(order_ / centralizers_[g]);
                s += (chars_[i][g].conj() * chars_[k][g]) * w;
            }
            Cyclotomic expect{Rational(i == k ? order_ : Int(0))};
            if (s != expect)
                throw std::runtime_error("DataCorrupt: row orthogonality fails in " + rs_.label +
                                         " chars " + std::to_string(i) + "," + std::to_string(k));
        }
    }
    // Column orthogonality for distinct classes.
    for (size_t g = 0; g < nc; ++g) {
        for (size_t h = g + 1; h < nc; ++h) {
            Cyclotomic s{Rational(0l)};
            for (const auto& row : chars_) s += row[g].conj() * row[h];
            if (!s.is_zero())
                throw std::runtime_error("DataCorrupt: column orthogonality fails in " +
                                         rs_.label + " classes " + classes_[g] + "," + classes_[h]);
        }
    }
}

size_t GroupTable::class_index(const std::string& cls) const {
    for (size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i] == cls) return i;
    throw std::domain_error("unknown class " + cls + " in " + rs_.label);
}

long GroupTable::class_order(const std::string& cls) const {
    class_index(cls);
    size_t i = 0;
    while (i < cls.size() && isdigit(cls[i])) ++i;
    return std::stol(cls.substr(0, i));
}

const Int& GroupTable::centralizer_order(const std::string& cls) const {
    return centralizers_[class_index(cls)];
}

Int GroupTable::class_size(const std::string& cls) const {
    return order_ / centralizer_order(cls);
}

const std::string& GroupTable::power_map(const std::string& cls, long p) const {
    auto it = powermaps_.find(p);
    if (it == powermaps_.end())
        throw std::domain_error("PrimeNotTabulated: p=" + std::to_string(p) + " for " + rs_.label);
    return it->second[class_index(cls)];
}

const TwistedEuler& GroupTable::twisted(const std::string& cls) const {
    return twisted_.at(fused_label(cls));
}

const std::string& GroupTable::fused_label(const std::string& cls) const {
    auto it = fused_of_.find(cls);
    if (it == fused_of_.end()) throw std::domain_error("unknown class " + cls);
    return it->second;
}

const std::vector<std::string>& GroupTable::fused_members(const std::string& fused) const {
    return fusion_members_.at(fused);
}

const std::vector<std::string>& GroupTable::all_root_systems() {
    static const std::vector<std::string> order = {
        "A1^24", "A2^12", "A3^8",   "A4^6",  "A5^4D4", "A6^4", "A7^2D5^2", "A8^3",
        "A9^2D6", "A11D7E6", "A12^2", "A15D9", "A17E7", "A24",  "D4^6",     "D6^4",
        "D8^3",  "D10E7^2", "D12^2", "D16E8", "D24",    "E6^4", "E8^3"};
    return order;
}

const GroupTable& GroupTable::load(const std::string& xlabel) {
    static std::mutex mu;
    static std::map<std::string, GroupTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(xlabel);
    if (it != cache.end()) return it->second;
    return cache.emplace(xlabel, parse_group_file(xlabel)).first->second;
}

const GroupTable& GroupTable::by_lambency(const std::string& ell) {
    for (const auto& x : all_root_systems()) {
        const GroupTable& t = load(x);
        if (t.root_system().lambency == ell) return t;
    }
    throw std::domain_error("unknown lambency " + ell);
}

} // namespace umbral
