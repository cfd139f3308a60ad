#pragma once

#include "twistcx/complex.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace twistcx {

/// A rejected complex document. `reason` is a stable machine-readable code
/// ("json", "schema", "parameters", "validation"); `location` points into
/// the document, e.g. "differential[2].basis" or "slot 0 -> 2 (V_1 -> V_0)".
class DocumentError : public std::runtime_error {
public:
    DocumentError(std::string reason, std::string location, const std::string& message)
        : std::runtime_error(message), reason_(std::move(reason)), location_(std::move(location)) {}

    const std::string& reason() const { return reason_; }
    const std::string& location() const { return location_; }

private:
    std::string reason_;
    std::string location_;
};

/// Reads {n, char, betti0?, summands: [{vertex, position}],
/// differential: [{from, to, basis, coeff}]}. With `check` set the complex
/// must pass validate(); the first violation is reported with its slot.
TwistedComplex complex_from_json(const nlohmann::json& doc, bool check = true);
TwistedComplex parse_complex(const std::string& text, bool check = true);

/// Canonical form: summands in order, differential entries sorted by
/// (from, to, basis), coefficients as decimal strings.
nlohmann::json to_json(const TwistedComplex& c);
std::string serialize(const TwistedComplex& c);

/// "U_3" for a Q0 summand at position 3, "V_3" for Q1.
std::string slot_name(const Summand& s);

}  // namespace twistcx
