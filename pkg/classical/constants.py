# classical/constants.py

# Constants related to the binary codes

# Primitive modulus of GF(2^w) for each extension degree w, stored as an
# integer where bit i is the coefficient of z^i (the z^w bit included).
# Settings may override entries through QGP_PRIMITIVE_POLYNOMIALS.
PrimitivePolynomials = {
    2: 0b111,  # z^2 + z + 1
    3: 0b1011,  # z^3 + z + 1
    4: 0b10011,  # z^4 + z + 1
    5: 0b100101,  # z^5 + z^2 + 1
    6: 0b1000011,  # z^6 + z + 1
    7: 0b10000011,  # z^7 + z + 1
    8: 0b100011101,  # z^8 + z^4 + z^3 + z^2 + 1
    9: 0b1000010001,  # z^9 + z^4 + 1
}
