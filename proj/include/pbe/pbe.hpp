#pragma once

#include "pbe/adversary.hpp"
#include "pbe/bytes.hpp"
#include "pbe/ciphertext.hpp"
#include "pbe/counters.hpp"
#include "pbe/error.hpp"
#include "pbe/improved.hpp"
#include "pbe/keyfile.hpp"
#include "pbe/original.hpp"
#include "pbe/primitives/lamport.hpp"
#include "pbe/primitives/params.hpp"
#include "pbe/primitives/pke.hpp"
#include "pbe/primitives/signature.hpp"
#include "pbe/primitives/symmetric.hpp"
#include "pbe/random.hpp"
#include "pbe/stats.hpp"
