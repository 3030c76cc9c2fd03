class MixedSpacing
{
    int aligned   = 1;
    int padded    = 22;
    int widest    = 333;

    void call()
    {
        deliver( aligned,  padded,   widest );
    }

    void deliver( int a, int b, int c )
    {
    }
}
