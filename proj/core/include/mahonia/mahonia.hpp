#ifndef MAHONIA_MAHONIA_HPP
#define MAHONIA_MAHONIA_HPP

#include "mahonia/bijections.hpp"
#include "mahonia/enumeration.hpp"
#include "mahonia/errors.hpp"
#include "mahonia/labeling.hpp"
#include "mahonia/multiset.hpp"
#include "mahonia/params.hpp"
#include "mahonia/partition.hpp"
#include "mahonia/poly.hpp"
#include "mahonia/qseries.hpp"
#include "mahonia/stats.hpp"
#include "mahonia/verification.hpp"
#include "mahonia/word.hpp"

#endif
