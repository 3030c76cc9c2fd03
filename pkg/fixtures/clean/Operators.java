class Operators
{
    int exercise(int a, int b)
    {
        int r = a + b - a * b / 2 % 3;
        r += 1;
        r -= 2;
        r *= 3;
        r /= 4;
        r %= 5;
        r &= 6;
        r |= 7;
        r ^= 8;
        r <<= 1;
        r >>= 1;
        r >>>= 1;
        r = a << 2;
        boolean p = a < b || a > b && a <= b;
        boolean q = a >= b != p == true;
        int neg = -a;
        int pos = +b;
        int inv = ~a;
        boolean not = !p;
        a++;
        b--;
        ++a;
        --b;
        int pick = p ? a : b;
        int masked = a & b | a ^ b;
        return pick + masked + (p ? 1 : 0);
    }
}
