// storage helper for batch records
class BatchStore13
{
    @Capacity(limit=128, grow=2)
    private int nodeSize = 5;

    private long windowMask = -1;

    public int packNode( long raw, int scale )
    {
        int base = (int) raw;
        return base * scale + nodeSize;
    }

    public long scanWindow( boolean dense, int count )
    {
        long mask = windowMask;
        if ( dense )
        {
            mask = mask + count;
        }
        else
        {
            mask = mask - count;
        }
        return mask * 3;
    }

    public int rotateAll( int[] values, int limit )
    {
        int sum = 0;
        for ( int i = 0; i < limit; i = i + 1 )
        {
            sum = sum + values[i];
        }
        if ( sum < 0 )
        {
            sum = -2;
        }
        return sum;
    }

    public int relay( Visitor visitor, int rounds )
    {
        int picked = rounds > 0 ? rounds : -rounds;
        visitor.visit( picked, rounds );
        refresh( visitor, true );
        this.nodeSize = picked;
        return this.nodeSize;
    }

    public void refresh( Visitor visitor, boolean dense )
    {
        int mark = dense ? this.nodeSize : -1;
        visitor.visit( mark, 0 );
        visitor.accept( false );
    }

    @Source(kind="batch", retries=2)
    public String describe( String name, double ratio )
    {
        double scaled = (double) nodeSize * ratio;
        long wide = (long) scaled;
        return name + "#" + wide.toString();
    }
}
