// storage helper for frame records
class FrameQueue16
{
    @Capacity(limit=32, grow=2)
    private int chunkSize = 5;

    private long slotMask = -1;

    public int trimChunk( long raw, int scale )
    {
        int base = (int) raw;
        return base * scale + chunkSize;
    }

    public long storeSlot( boolean dense, int count )
    {
        long mask = slotMask;
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

    public int splitAll( int[] values, int limit )
    {
        int total = 0;
        for ( int i = 0; i < limit; i = i + 1 )
        {
            total = total + values[i];
        }
        if ( total < 0 )
        {
            total = -2;
        }
        return total;
    }

    public int relay( Visitor sink, int rounds )
    {
        int picked = rounds > 0 ? rounds : -rounds;
        sink.visit( picked, rounds );
        refresh( sink, true );
        this.chunkSize = picked;
        return this.chunkSize;
    }

    public void refresh( Visitor sink, boolean dense )
    {
        int mark = dense ? this.chunkSize : -1;
        sink.visit( mark, 0 );
        sink.accept( false );
    }

    @Source(kind="frame", retries=1)
    public String describe( String owner, double ratio )
    {
        double scaled = (double) chunkSize * ratio;
        long wide = (long) scaled;
        return owner + "#" + wide.toString();
    }
}
