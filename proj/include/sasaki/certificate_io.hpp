#pragma once

// Certificate document format, schema "sasaki-collapse-certificate/1".
// Reals are written with 17 significant digits; output is byte-for-byte
// deterministic. See docs/formats.md.

#include <filesystem>
#include <string>

#include "sasaki/collapse.hpp"

namespace sasaki {

inline constexpr const char* kCertificateSchema = "sasaki-collapse-certificate/1";

std::string serialize_certificate(const CollapseCertificate& cert);
// Throws Error(Format) on malformed documents or a wrong schema tag.
CollapseCertificate parse_certificate(const std::string& text);

CollapseCertificate load_certificate_file(const std::filesystem::path& path);
void save_certificate_file(const CollapseCertificate& cert, const std::filesystem::path& path);

// "%.17g"
std::string format_real(double x);

}  // namespace sasaki
