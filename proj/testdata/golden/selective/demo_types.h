/* Generated by padguard (strategy: selective). Do not edit. */

#ifndef DEMO_TYPES_H
#define DEMO_TYPES_H

#include <stddef.h>
#include <stdint.h>

typedef struct {
	uint64_t val1;
	uint8_t val2;
	uint64_t val3;
} test_struct;

#endif /* DEMO_TYPES_H */
