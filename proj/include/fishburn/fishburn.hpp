#pragma once

#include "fishburn/cover.hpp"
#include "fishburn/enumeration.hpp"
#include "fishburn/error.hpp"
#include "fishburn/matrix.hpp"
#include "fishburn/poset.hpp"
#include "fishburn/sequence.hpp"
#include "fishburn/text_io.hpp"
#include "fishburn/transforms.hpp"
#include "fishburn/tree.hpp"
#include "fishburn/verify.hpp"
