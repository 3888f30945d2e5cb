#pragma once

// Serialisation of results as line-delimited JSON, CSV rows and text.
// Big integers and rationals are always written as decimal strings.

#include <string>
#include <string_view>

#include <json.hpp>

#include "singmod/cmnum.hpp"
#include "singmod/lemma.hpp"
#include "singmod/trace.hpp"

namespace singmod {

enum class Format { text, json, csv };

Format parse_format(std::string_view s);

using Json = nlohmann::ordered_json;

Json to_json(TraceResult const & t);
Json to_json(CongruenceReport const & r, bool with_timing);
Json to_json(LemmaReport const & r);
Json to_json(Discriminant d, HilbertResult const & h);

/// Matches the fixed verify header
/// d,p,n,m,alpha,value,valuation,holds,status,bits,millis.
std::string csv_header_congruence();
std::string to_csv(CongruenceReport const & r, bool with_timing);

std::string csv_header_lemma();
std::string to_csv(LemmaReport const & r);

std::string csv_header_trace();
/// One row per part.
std::string to_csv(TraceResult const & t);

std::string to_text(CongruenceReport const & r, bool with_timing);

std::string valuation_string(std::optional<unsigned> v);

} // namespace singmod
