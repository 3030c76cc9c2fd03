class CastZoo
{
    long widen(int narrow)
    {
        byte b = (byte) narrow;
        short s = (short) narrow;
        char c = (char) narrow;
        float f = (float) narrow;
        double d = (double) f;
        long wide = (long) d;
        return wide + (int) s + (long) b + (int) c;
    }
}
