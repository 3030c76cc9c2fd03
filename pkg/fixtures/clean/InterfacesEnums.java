interface Shape
{
    double area();

    enum Kind
    {
        ROUND,
        SQUARE;

        Kind flip()
        {
            return this == ROUND ? SQUARE : ROUND;
        }
    }
}
