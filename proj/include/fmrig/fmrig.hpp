#pragma once

#include "fmrig/carrier.hpp"
#include "fmrig/derive.hpp"
#include "fmrig/error.hpp"
#include "fmrig/generate.hpp"
#include "fmrig/lincomb.hpp"
#include "fmrig/modality.hpp"
#include "fmrig/nat.hpp"
#include "fmrig/normal_form.hpp"
#include "fmrig/normalize.hpp"
#include "fmrig/parse.hpp"
#include "fmrig/render.hpp"
#include "fmrig/rewrite.hpp"
#include "fmrig/tensor.hpp"
#include "fmrig/term.hpp"
