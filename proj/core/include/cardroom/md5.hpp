#pragma once

#include <string>
#include <string_view>

namespace cardroom {

/// MD5 of the bytes, as 32 lowercase hex characters. Used to checksum
/// ordered-hand dumps; not for anything security-related.
std::string md5_hex(std::string_view data);

}  // namespace cardroom
