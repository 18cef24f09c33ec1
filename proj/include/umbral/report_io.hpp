#ifndef UMBRAL_REPORT_IO_HPP
#define UMBRAL_REPORT_IO_HPP

#include <map>
#include <string>

namespace umbral {

std::string sha256_hex(const std::string& data);

/// Checks every fixture file against data/fixtures/manifest.json.
/// Returns a map file -> "ok" | "hash-mismatch" | "missing".
std::map<std::string, std::string> fixture_status();

/// Throws unless every fixture matches its manifest hash (or override is set).
void require_clean_fixtures(bool allow_dirty);

} // namespace umbral

#endif
