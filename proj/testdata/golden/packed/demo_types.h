/* Generated by padguard (strategy: packed). Do not edit. */

#ifndef DEMO_TYPES_H
#define DEMO_TYPES_H

#include <stddef.h>
#include <stdint.h>

#pragma pack(push, 1)

typedef struct {
	uint64_t val1;
	uint8_t val2;
	uint64_t val3;
} test_struct;

#pragma pack(pop)

#endif /* DEMO_TYPES_H */
